#include "derand/detail/dense_poly.hpp"

#include "derand/errors.hpp"

namespace derand::detail {

DensePoly constant_poly(int vars, Complex value) {
    return {MonomialBasis::get(vars, 0), {value}};
}

DensePoly linear_form(std::span<const Complex> coeffs) {
    const int vars = static_cast<int>(coeffs.size());
    auto basis = MonomialBasis::get(vars, 1);
    // x_0, x_1, ... is exactly the descending lexicographic order in degree 1.
    return {basis, std::vector<Complex>(coeffs.begin(), coeffs.end())};
}

DensePoly multiply(const DensePoly& a, const DensePoly& b) {
    const int vars = a.basis->vars();
    if (b.basis->vars() != vars) throw ContractViolation("multiplying polynomials in different rings");
    auto basis = MonomialBasis::get(vars, a.basis->degree() + b.basis->degree());
    DensePoly out{basis, std::vector<Complex>(basis->size(), Complex(0.0, 0.0))};
    Exponents sum(static_cast<std::size_t>(vars));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == Complex(0.0, 0.0)) continue;
        const auto& ea = a.basis->exponents(i);
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j] == Complex(0.0, 0.0)) continue;
            const auto& eb = b.basis->exponents(j);
            for (std::size_t v = 0; v < sum.size(); ++v) sum[v] = ea[v] + eb[v];
            out.coeffs[basis->index_of(sum)] += a.coeffs[i] * b.coeffs[j];
        }
    }
    return out;
}

DensePoly power(const DensePoly& p, int k) {
    if (k < 0) throw ContractViolation("negative power");
    DensePoly out = constant_poly(p.basis->vars(), 1.0);
    for (int e = 0; e < k; ++e) out = multiply(out, p);
    return out;
}

}  // namespace derand::detail
