#include "derand/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "derand/bench.hpp"
#include "derand/system_io.hpp"

namespace derand::cli {

namespace {

using nlohmann::json;

struct SolverFlags {
    int max_rounds = 8;
    std::string trig = "hw";
    std::string geodesic = "exact";
    std::string mu = "exact";
    std::string entropy = "fail";
    std::uint64_t seed = 0;

    void attach(CLI::App& cmd) {
        cmd.add_option("--max-rounds", max_rounds, "precision-doubling rounds before giving up")->check(CLI::PositiveNumber);
        cmd.add_option("--trig", trig, "Sibuya trigonometry")->check(CLI::IsMember({"hw", "bss"}));
        cmd.add_option("--geodesic", geodesic, "homotopy interpolation")->check(CLI::IsMember({"exact", "chord"}));
        cmd.add_option("--mu", mu, "condition number evaluation")->check(CLI::IsMember({"exact", "bound"}));
        cmd.add_option("--entropy-fallback", entropy, "behaviour when the input noise is exhausted")
            ->check(CLI::IsMember({"fail", "hash"}));
        cmd.add_option("--seed", seed, "seed for randomized runs");
    }

    SolverConfig config() const {
        SolverConfig cfg;
        cfg.max_rounds = max_rounds;
        cfg.trig.mode = trig == "bss" ? TrigMode::bss : TrigMode::hardware;
        cfg.geodesic = geodesic == "chord" ? GeodesicMode::chord : GeodesicMode::exact;
        cfg.mu_mode = mu == "bound" ? MuMode::bound : MuMode::exact;
        cfg.entropy_fallback = entropy == "hash" ? EntropyFallback::hash : EntropyFallback::fail;
        cfg.rng_seed = seed;
        return cfg;
    }
};

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

std::vector<int> parse_degrees(const std::string& text) {
    std::vector<int> degrees;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            degrees.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("bad degree list: " + text);
        }
    }
    return degrees;
}

ProjectivePoint point_from_report(const json& doc) {
    const json& coords = doc.contains("root") ? doc.at("root") : doc;
    CVector v(static_cast<Eigen::Index>(coords.size()));
    for (std::size_t j = 0; j < coords.size(); ++j) {
        v(static_cast<Eigen::Index>(j)) = Complex(coords[j].at("re").get<double>(), coords[j].at("im").get<double>());
    }
    return ProjectivePoint(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified roots of homogeneous polynomial systems by homotopy continuation", "derand"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "solve a system file and print a JSON report");
    std::string solve_path;
    bool randomized = false;
    SolverFlags solve_flags;
    solve->add_option("file", solve_path, "system JSON file, or - for stdin")->required();
    solve->add_flag("--randomized", randomized, "use a seeded random start pair instead of the input's noise");
    solve_flags.attach(*solve);

    // gen
    auto* gen = app.add_subcommand("gen", "print a uniformly random unit system");
    int gen_n = 2;
    std::string gen_degrees = "2,2";
    std::uint64_t gen_seed = 0;
    gen->add_option("--n", gen_n, "number of equations")->check(CLI::PositiveNumber);
    gen->add_option("--degrees", gen_degrees, "comma-separated degrees");
    gen->add_option("--seed", gen_seed, "generator seed");

    // certify
    auto* certify = app.add_subcommand("certify", "check that a point is an approximate root");
    std::string cert_path;
    std::vector<double> cert_point;
    std::string cert_report;
    int cert_iters = 6;
    certify->add_option("file", cert_path, "system JSON file")->required();
    certify->add_option("--point", cert_point, "candidate point as re im pairs");
    certify->add_option("--from-report", cert_report, "take the point from a solve report (- for stdin)");
    certify->add_option("--iters", cert_iters, "Newton refinement steps")->check(CLI::Range(3, 64));

    // bench
    auto* bench = app.add_subcommand("bench", "Monte Carlo statistics as CSV");
    std::string bench_kind = "steps";
    int bench_trials = 100;
    std::uint64_t bench_seed = 0;
    int bench_n = 2;
    std::string bench_degrees = "2,2";
    int bench_jobs = 1;
    int oracle_resolution = 10'000;
    SolverFlags bench_flags;
    bench->add_option("kind", bench_kind, "steps | mu | omega | paths")->required()->check(
        CLI::IsMember({"steps", "mu", "omega", "paths"}));
    bench->add_option("--trials", bench_trials, "number of trials")->check(CLI::PositiveNumber);
    bench->add_option("--n", bench_n, "number of equations")->check(CLI::PositiveNumber);
    bench->add_option("--degrees", bench_degrees, "comma-separated degrees");
    bench->add_option("--jobs", bench_jobs, "worker threads")->check(CLI::PositiveNumber);
    bench->add_option("--oracle-resolution", oracle_resolution, "path oracle steps")->check(CLI::Range(1000, 10'000'000));
    bench_flags.attach(*bench);
    bench->remove_option(bench->get_option("--seed"));
    bench->add_option("--seed", bench_seed, "master seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_or_parse;
    }

    try {
        if (*solve) {
            PolySystem f = parse_system(slurp(solve_path, in));
            SolverConfig cfg = solve_flags.config();
            const int D = f.profile().D();
            try {
                SolveReport rep = randomized ? bp_solve(f, cfg) : dbp(f, cfg);
                out << report_to_json(rep, D).dump(2) << '\n';
                return rep.certificate.passed ? ok : not_certified;
            } catch (const RoundsExceeded& e) {
                json doc = report_to_json(e.partial(), D);
                doc["certified"] = false;
                doc["error"] = "rounds_exceeded";
                doc.erase("root");
                doc.erase("certificate");
                out << doc.dump(2) << '\n';
                err << "derand: " << e.what() << '\n';
                return solve_failed;
            } catch (const EntropyExhausted& e) {
                out << json{{"certified", false}, {"error", "entropy_exhausted"}}.dump(2) << '\n';
                err << "derand: " << e.what() << '\n';
                return solve_failed;
            }
        }
        if (*gen) {
            DegreeProfile prof(gen_n, parse_degrees(gen_degrees));
            out << system_to_json(random_unit_system(prof, gen_seed).system()).dump(2) << '\n';
            return ok;
        }
        if (*certify) {
            bool from_stdin_report = cert_report == "-";
            PolySystem f = parse_system(slurp(cert_path, in));
            ProjectivePoint z = [&] {
                if (!cert_report.empty()) {
                    json doc = json::parse(slurp(cert_report, in));
                    return point_from_report(doc);
                }
                if (cert_point.size() != 2 * static_cast<std::size_t>(f.profile().vars()))
                    throw ParseError("--point needs " + std::to_string(2 * f.profile().vars()) + " numbers");
                CVector v(f.profile().vars());
                for (Eigen::Index j = 0; j < v.size(); ++j)
                    v(j) = Complex(cert_point[static_cast<std::size_t>(2 * j)], cert_point[static_cast<std::size_t>(2 * j + 1)]);
                return ProjectivePoint(v);
            }();
            (void)from_stdin_report;
            if (z.size() != f.profile().vars()) throw ParseError("point dimension does not match the system");
            Certificate cert = certify_root(SpherePoint::normalize(f).system(), z, cert_iters);
            out << certificate_to_json(cert, f.profile().D()).dump(2) << '\n';
            return cert.passed ? ok : not_certified;
        }
        if (*bench) {
            BenchOptions opts;
            opts.kind = parse_bench_kind(bench_kind);
            opts.trials = bench_trials;
            opts.seed = bench_seed;
            opts.n = bench_n;
            opts.degrees = parse_degrees(bench_degrees);
            opts.jobs = bench_jobs;
            opts.oracle_resolution = oracle_resolution;
            opts.solver = bench_flags.config();
            auto rows = run_bench(opts);
            write_bench_csv(rows, out);
            if (opts.kind == BenchKind::omega) {
                std::map<int, int> histogram;
                for (const auto& r : rows) ++histogram[r.rounds];
                err << "rounds histogram:";
                for (auto [rounds, count] : histogram) err << ' ' << rounds << ':' << count;
                err << '\n';
            }
            return ok;
        }
    } catch (const json::exception& e) {
        err << "derand: malformed input: " << e.what() << '\n';
        return usage_or_parse;
    } catch (const ParseError& e) {
        err << "derand: " << e.what() << '\n';
        return usage_or_parse;
    } catch (const ContractViolation& e) {
        err << "derand: " << e.what() << '\n';
        return usage_or_parse;
    }
    return usage_or_parse;
}

}  // namespace derand::cli
