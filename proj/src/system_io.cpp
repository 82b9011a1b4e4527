#include "derand/system_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "derand/errors.hpp"

namespace derand {

using nlohmann::json;

PolySystem system_from_json(const json& doc) {
    try {
        if (!doc.is_object()) throw ParseError("system file must be a JSON object");
        int n = doc.at("n").get<int>();
        auto degrees = doc.at("degrees").get<std::vector<int>>();
        DegreeProfile profile(n, degrees);
        const auto& eqs = doc.at("equations");
        if (!eqs.is_array() || static_cast<int>(eqs.size()) != n)
            throw ParseError("expected " + std::to_string(n) + " equations");

        PolySystem f(profile);
        for (int i = 0; i < n; ++i) {
            const auto& basis = profile.basis(i);
            std::vector<bool> seen(basis.size(), false);
            auto coeffs = f.coeffs(i);
            for (const auto& term : eqs.at(static_cast<std::size_t>(i))) {
                auto exps = term.at("exponents").get<std::vector<int>>();
                std::size_t idx = basis.index_of(exps);
                if (seen[idx]) throw ParseError("duplicate monomial in equation " + std::to_string(i));
                seen[idx] = true;
                double re = term.value("re", 0.0);
                double im = term.value("im", 0.0);
                coeffs[idx] = Complex(re, im);
            }
        }
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed system: ") + e.what());
    } catch (const ContractViolation& e) {
        throw ParseError(std::string("malformed system: ") + e.what());
    }
}

PolySystem parse_system(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return system_from_json(doc);
}

PolySystem read_system_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

json system_to_json(const PolySystem& f) {
    const auto& prof = f.profile();
    json eqs = json::array();
    for (int i = 0; i < prof.n(); ++i) {
        const auto& basis = prof.basis(i);
        auto c = f.coeffs(i);
        json terms = json::array();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            terms.push_back({{"exponents", basis.exponents(k)}, {"re", c[k].real()}, {"im", c[k].imag()}});
        }
        eqs.push_back(std::move(terms));
    }
    return {{"n", prof.n()}, {"degrees", prof.degrees()}, {"equations", std::move(eqs)}};
}

}  // namespace derand
