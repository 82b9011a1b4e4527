#include "derand/systems.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

#include "derand/detail/dense_poly.hpp"
#include "derand/errors.hpp"

namespace derand {

namespace {

void enumerate_exponents(int vars, int degree, Exponents& prefix, std::vector<Exponents>& out) {
    if (static_cast<int>(prefix.size()) == vars - 1) {
        prefix.push_back(degree);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int a = degree; a >= 0; --a) {
        prefix.push_back(a);
        enumerate_exponents(vars, degree - a, prefix, out);
        prefix.pop_back();
    }
}

double factorial(int k) {
    double r = 1.0;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

std::size_t binomial(int n, int k) {
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

}  // namespace

MonomialBasis::MonomialBasis(int vars, int degree) : vars_(vars), degree_(degree) {
    if (vars < 1 || degree < 0) throw ContractViolation("invalid monomial basis shape");
    Exponents prefix;
    if (vars == 1) {
        exponents_.push_back({degree});
    } else {
        enumerate_exponents(vars, degree, prefix, exponents_);
    }
    weights_.reserve(exponents_.size());
    scales_.reserve(exponents_.size());
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        double w = weyl_norm_sq_monomial(exponents_[i], degree);
        weights_.push_back(w);
        scales_.push_back(std::sqrt(w));
        lookup_.emplace(key(exponents_[i]), i);
    }
}

std::shared_ptr<const MonomialBasis> MonomialBasis::get(int vars, int degree) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{vars, degree}];
    if (!slot) slot = std::make_shared<const MonomialBasis>(vars, degree);
    return slot;
}

std::uint64_t MonomialBasis::key(std::span<const int> exps) const {
    std::uint64_t k = 0;
    for (int a : exps) k = k * static_cast<std::uint64_t>(degree_ + 1) + static_cast<std::uint64_t>(a);
    return k;
}

std::size_t MonomialBasis::index_of(std::span<const int> exps) const {
    if (static_cast<int>(exps.size()) != vars_) throw ContractViolation("exponent tuple has wrong length");
    int sum = 0;
    for (int a : exps) {
        if (a < 0) throw ContractViolation("negative exponent");
        sum += a;
    }
    if (sum != degree_) throw ContractViolation("exponent sum differs from degree");
    return lookup_.at(key(exps));
}

DegreeProfile::DegreeProfile(int n, std::vector<int> degrees) : n_(n), degrees_(std::move(degrees)) {
    if (n < 1) throw ContractViolation("need at least one equation");
    if (static_cast<int>(degrees_.size()) != n)
        throw ContractViolation("expected " + std::to_string(n) + " degrees, got " + std::to_string(degrees_.size()));
    for (int d : degrees_) {
        if (d < 1) throw ContractViolation("degrees must be positive");
        offsets_.push_back(N_);
        N_ += binomial(n + d, n);
        D_ = std::max(D_, d);
        bases_.push_back(MonomialBasis::get(n + 1, d));
    }
}

PolySystem::PolySystem(DegreeProfile profile)
    : profile_(std::move(profile)), coeffs_(profile_.N(), Complex(0.0, 0.0)) {}

PolySystem::PolySystem(DegreeProfile profile, std::vector<Complex> flat_coeffs)
    : profile_(std::move(profile)), coeffs_(std::move(flat_coeffs)) {
    if (coeffs_.size() != profile_.N()) throw ContractViolation("coefficient count does not match profile");
}

std::span<const Complex> PolySystem::coeffs(int eq) const {
    return {coeffs_.data() + profile_.offset(eq), profile_.basis(eq).size()};
}

std::span<Complex> PolySystem::coeffs(int eq) {
    return {coeffs_.data() + profile_.offset(eq), profile_.basis(eq).size()};
}

PolySystem& PolySystem::operator+=(const PolySystem& other) {
    if (!(profile_ == other.profile_)) throw ProfileMismatch();
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

PolySystem& PolySystem::operator-=(const PolySystem& other) {
    if (!(profile_ == other.profile_)) throw ProfileMismatch();
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

PolySystem& PolySystem::operator*=(Complex s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

double weyl_norm_sq_monomial(std::span<const int> alpha, int d) {
    int sum = 0;
    double num = 1.0;
    for (int a : alpha) {
        if (a < 0) throw ContractViolation("negative exponent");
        sum += a;
        num *= factorial(a);
    }
    if (sum != d) throw ContractViolation("exponent sum differs from degree");
    return num / factorial(d);
}

Complex weyl_inner(const PolySystem& f, const PolySystem& g) {
    if (!(f.profile() == g.profile())) throw ProfileMismatch();
    Complex acc(0.0, 0.0);
    for (int i = 0; i < f.n(); ++i) {
        const auto& basis = f.profile().basis(i);
        auto fc = f.coeffs(i);
        auto gc = g.coeffs(i);
        for (std::size_t k = 0; k < basis.size(); ++k) acc += basis.weyl_weight(k) * fc[k] * std::conj(gc[k]);
    }
    return acc;
}

double weyl_norm(const PolySystem& f) {
    double acc = 0.0;
    for (int i = 0; i < f.n(); ++i) {
        const auto& basis = f.profile().basis(i);
        auto fc = f.coeffs(i);
        for (std::size_t k = 0; k < basis.size(); ++k) acc += basis.weyl_weight(k) * std::norm(fc[k]);
    }
    return std::sqrt(acc);
}

namespace {

// powers[j][k] = z_j^k for k <= D
std::vector<std::vector<Complex>> power_table(const CVector& z, int D) {
    std::vector<std::vector<Complex>> powers(static_cast<std::size_t>(z.size()));
    for (Eigen::Index j = 0; j < z.size(); ++j) {
        auto& row = powers[static_cast<std::size_t>(j)];
        row.resize(static_cast<std::size_t>(D) + 1);
        row[0] = 1.0;
        for (int k = 1; k <= D; ++k) row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k) - 1] * z(j);
    }
    return powers;
}

void check_point(const PolySystem& f, const CVector& z) {
    if (z.size() != f.profile().vars()) throw ContractViolation("point has wrong dimension");
}

}  // namespace

CVector evaluate(const PolySystem& f, const CVector& z) {
    check_point(f, z);
    const auto& prof = f.profile();
    auto powers = power_table(z, prof.D());
    CVector out(prof.n());
    for (int i = 0; i < prof.n(); ++i) {
        const auto& basis = prof.basis(i);
        auto c = f.coeffs(i);
        Complex acc(0.0, 0.0);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (c[k] == Complex(0.0, 0.0)) continue;
            Complex m = c[k];
            const auto& a = basis.exponents(k);
            for (std::size_t j = 0; j < a.size(); ++j) m *= powers[j][static_cast<std::size_t>(a[j])];
            acc += m;
        }
        out(i) = acc;
    }
    return out;
}

CMatrix jacobian(const PolySystem& f, const CVector& z) {
    check_point(f, z);
    const auto& prof = f.profile();
    const auto vars = static_cast<std::size_t>(prof.vars());
    auto powers = power_table(z, prof.D());
    CMatrix J = CMatrix::Zero(prof.n(), prof.vars());
    for (int i = 0; i < prof.n(); ++i) {
        const auto& basis = prof.basis(i);
        auto c = f.coeffs(i);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (c[k] == Complex(0.0, 0.0)) continue;
            const auto& a = basis.exponents(k);
            for (std::size_t j = 0; j < vars; ++j) {
                if (a[j] == 0) continue;
                Complex m = c[k] * static_cast<double>(a[j]) * powers[j][static_cast<std::size_t>(a[j] - 1)];
                for (std::size_t l = 0; l < vars; ++l) {
                    if (l != j) m *= powers[l][static_cast<std::size_t>(a[l])];
                }
                J(i, static_cast<Eigen::Index>(j)) += m;
            }
        }
    }
    return J;
}

PolySystem compose_linear(const PolySystem& f, const CMatrix& U) {
    const auto& prof = f.profile();
    const int vars = prof.vars();
    if (U.rows() != vars || U.cols() != vars) throw ContractViolation("substitution matrix has wrong shape");

    // (U x)_j as linear forms, with all powers up to D.
    std::vector<std::vector<detail::DensePoly>> row_powers(static_cast<std::size_t>(vars));
    for (int j = 0; j < vars; ++j) {
        std::vector<Complex> row(static_cast<std::size_t>(vars));
        for (int k = 0; k < vars; ++k) row[static_cast<std::size_t>(k)] = U(j, k);
        auto lin = detail::linear_form(row);
        auto& pw = row_powers[static_cast<std::size_t>(j)];
        pw.push_back(detail::constant_poly(vars, 1.0));
        for (int e = 1; e <= prof.D(); ++e) pw.push_back(detail::multiply(pw.back(), lin));
    }

    PolySystem out(prof);
    for (int i = 0; i < prof.n(); ++i) {
        const auto& basis = prof.basis(i);
        auto src = f.coeffs(i);
        auto dst = out.coeffs(i);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (src[k] == Complex(0.0, 0.0)) continue;
            const auto& a = basis.exponents(k);
            detail::DensePoly term = detail::constant_poly(vars, src[k]);
            for (int j = 0; j < vars; ++j) {
                int e = a[static_cast<std::size_t>(j)];
                if (e > 0) term = detail::multiply(term, row_powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)]);
            }
            for (std::size_t m = 0; m < term.coeffs.size(); ++m) dst[m] += term.coeffs[m];
        }
    }
    return out;
}

RVector to_real_coords(const PolySystem& f) {
    const auto& prof = f.profile();
    RVector v(2 * static_cast<Eigen::Index>(prof.N()));
    Eigen::Index pos = 0;
    for (int i = 0; i < prof.n(); ++i) {
        const auto& basis = prof.basis(i);
        auto c = f.coeffs(i);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            double s = basis.weyl_scale(k);
            v(pos++) = c[k].real() * s;
            v(pos++) = c[k].imag() * s;
        }
    }
    return v;
}

PolySystem from_real_coords(const RVector& v, const DegreeProfile& profile) {
    if (v.size() != 2 * static_cast<Eigen::Index>(profile.N()))
        throw ContractViolation("real coordinate vector has wrong length");
    PolySystem f(profile);
    Eigen::Index pos = 0;
    for (int i = 0; i < profile.n(); ++i) {
        const auto& basis = profile.basis(i);
        auto c = f.coeffs(i);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            double s = basis.weyl_scale(k);
            double re = v(pos++);
            double im = v(pos++);
            c[k] = Complex(re / s, im / s);
        }
    }
    return f;
}

}  // namespace derand
