#pragma once

// Dense homogeneous polynomial systems with the Weyl (Bombieri) inner product.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace derand {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// Exponent tuple (a_0, ..., a_n) of one monomial.
using Exponents = std::vector<int>;

/// Homogeneous monomials of a fixed degree in a fixed number of variables,
/// listed in lexicographically descending order of their exponent tuples.
/// Instances are interned: `get` returns the same object for equal arguments.
class MonomialBasis {
public:
    static std::shared_ptr<const MonomialBasis> get(int vars, int degree);

    int vars() const { return vars_; }
    int degree() const { return degree_; }
    std::size_t size() const { return exponents_.size(); }

    const Exponents& exponents(std::size_t index) const { return exponents_[index]; }
    const std::vector<Exponents>& all() const { return exponents_; }

    /// Position of `exps` in the canonical order. Throws ContractViolation
    /// when the tuple has the wrong length or degree.
    std::size_t index_of(std::span<const int> exps) const;

    /// a_0! ... a_n! / d!
    double weyl_weight(std::size_t index) const { return weights_[index]; }
    /// sqrt(weyl_weight), the factor taking a coefficient to orthonormal coordinates.
    double weyl_scale(std::size_t index) const { return scales_[index]; }

    MonomialBasis(int vars, int degree);

private:
    std::uint64_t key(std::span<const int> exps) const;

    int vars_;
    int degree_;
    std::vector<Exponents> exponents_;
    std::vector<double> weights_;
    std::vector<double> scales_;
    std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

/// Number of equations n, their degrees, and the derived sizes N and D.
class DegreeProfile {
public:
    DegreeProfile(int n, std::vector<int> degrees);

    int n() const { return n_; }
    int vars() const { return n_ + 1; }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
    /// Complex dimension of the system space: sum_i binom(n + d_i, n).
    std::size_t N() const { return N_; }
    /// max_i d_i
    int D() const { return D_; }

    const MonomialBasis& basis(int i) const { return *bases_[static_cast<std::size_t>(i)]; }
    std::size_t offset(int i) const { return offsets_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const DegreeProfile& a, const DegreeProfile& b) {
        return a.n_ == b.n_ && a.degrees_ == b.degrees_;
    }

private:
    int n_;
    std::vector<int> degrees_;
    std::size_t N_ = 0;
    int D_ = 0;
    std::vector<std::shared_ptr<const MonomialBasis>> bases_;
    std::vector<std::size_t> offsets_;
};

/// An element of the system space: one dense coefficient vector per equation,
/// stored back to back in canonical monomial order.
class PolySystem {
public:
    explicit PolySystem(DegreeProfile profile);
    PolySystem(DegreeProfile profile, std::vector<Complex> flat_coeffs);

    const DegreeProfile& profile() const { return profile_; }
    int n() const { return profile_.n(); }

    std::span<const Complex> coeffs(int eq) const;
    std::span<Complex> coeffs(int eq);
    const std::vector<Complex>& flat() const { return coeffs_; }
    std::vector<Complex>& flat() { return coeffs_; }

    PolySystem& operator+=(const PolySystem& other);
    PolySystem& operator-=(const PolySystem& other);
    PolySystem& operator*=(Complex s);

    friend PolySystem operator+(PolySystem a, const PolySystem& b) { return a += b; }
    friend PolySystem operator-(PolySystem a, const PolySystem& b) { return a -= b; }
    friend PolySystem operator*(Complex s, PolySystem a) { return a *= s; }
    friend PolySystem operator*(double s, PolySystem a) { return a *= Complex(s, 0.0); }

private:
    DegreeProfile profile_;
    std::vector<Complex> coeffs_;
};

/// a_0! ... a_n! / d!. Throws ContractViolation when sum(alpha) != d.
double weyl_norm_sq_monomial(std::span<const int> alpha, int d);

/// Hermitian Weyl product, linear in the first argument.
Complex weyl_inner(const PolySystem& f, const PolySystem& g);
double weyl_norm(const PolySystem& f);

CVector evaluate(const PolySystem& f, const CVector& z);
/// n x (n+1) matrix of partial derivatives at z.
CMatrix jacobian(const PolySystem& f, const CVector& z);

/// The system x -> f(U x), expanded exactly in the monomial basis.
PolySystem compose_linear(const PolySystem& f, const CMatrix& U);

/// Coordinates of f in the orthonormal Weyl basis: (re, im) per monomial,
/// equations concatenated. Length 2N; the Euclidean norm equals weyl_norm(f).
RVector to_real_coords(const PolySystem& f);
PolySystem from_real_coords(const RVector& v, const DegreeProfile& profile);

}  // namespace derand
