#pragma once

// Small dense arithmetic on single homogeneous polynomials, used to expand
// substitutions and products into the canonical monomial basis.

#include <memory>
#include <span>
#include <vector>

#include "derand/systems.hpp"

namespace derand::detail {

struct DensePoly {
    std::shared_ptr<const MonomialBasis> basis;
    std::vector<Complex> coeffs;
};

DensePoly constant_poly(int vars, Complex value);
/// sum_j coeffs[j] x_j
DensePoly linear_form(std::span<const Complex> coeffs);
DensePoly multiply(const DensePoly& a, const DensePoly& b);
DensePoly power(const DensePoly& p, int k);

}  // namespace derand::detail
