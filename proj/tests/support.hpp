#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/QR>

#include "derand/homotopy.hpp"
#include "derand/randomization.hpp"
#include "derand/solver.hpp"

namespace testing {

using namespace derand;

inline CVector random_cvector(Eigen::Index size, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    CVector v(size);
    for (auto& c : v) c = Complex(normal(rng), normal(rng));
    return v;
}

inline ProjectivePoint random_point(int vars, std::mt19937_64& rng) {
    return ProjectivePoint(random_cvector(vars, rng));
}

inline PolySystem random_system(const DegreeProfile& prof, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    PolySystem f(prof);
    for (auto& c : f.flat()) c = Complex(normal(rng), normal(rng));
    return f;
}

/// Haar-ish unitary from the QR factorization of a complex Gaussian matrix.
inline CMatrix random_unitary(int size, std::mt19937_64& rng) {
    CMatrix G(size, size);
    for (int j = 0; j < size; ++j) G.col(j) = random_cvector(size, rng);
    Eigen::HouseholderQR<CMatrix> qr(G);
    CMatrix Q = qr.householderQ();
    return Q;
}

/// Random system vanishing at the unit vector zeta: each f_i minus f_i(zeta) <x, zeta>^{d_i}.
inline PolySystem system_with_root(const DegreeProfile& prof, const CVector& zeta, std::mt19937_64& rng) {
    PolySystem f = random_system(prof, rng);
    CVector val = evaluate(f, zeta);
    for (int i = 0; i < prof.n(); ++i) {
        const auto& basis = prof.basis(i);
        auto coeffs = f.coeffs(i);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const auto& a = basis.exponents(k);
            double multinomial = 1.0 / basis.weyl_weight(k);
            Complex mono = multinomial;
            for (int j = 0; j < prof.vars(); ++j) mono *= std::pow(std::conj(zeta(j)), a[static_cast<std::size_t>(j)]);
            coeffs[k] -= val(i) * mono;
        }
    }
    return f;
}

inline double max_abs(const CVector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

/// Two-sided one-sample Kolmogorov-Smirnov statistic.
template <class Cdf>
double ks_statistic(std::vector<double> sample, Cdf cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        double F = cdf(sample[i]);
        d = std::max({d, (static_cast<double>(i) + 1.0) / n - F, F - static_cast<double>(i) / n});
    }
    return d;
}

/// Asymptotic KS critical value at level 1e-3: sqrt(-ln(alpha/2)/2) / sqrt(n).
inline double ks_critical(std::size_t n) { return std::sqrt(-std::log(0.5e-3) / 2.0) / std::sqrt(static_cast<double>(n)); }

}  // namespace testing
