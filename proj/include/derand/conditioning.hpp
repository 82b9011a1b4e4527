#pragma once

// Projective Newton operator, condition number mu, and approximate-root certificates.

#include <vector>

#include "derand/projective.hpp"
#include "derand/systems.hpp"

namespace derand {

/// Orthonormal basis of z^perp as the columns of an (n+1) x n matrix, taken
/// from the Householder reflection that maps z to a multiple of e_0.
CMatrix orthonormal_complement(const CVector& z);

/// One projective Newton step. Throws SingularJacobian when the restricted
/// Jacobian has sigma_min <= 1e-14 sigma_max.
ProjectivePoint newton_step(const PolySystem& f, const ProjectivePoint& z);

/// ||f|| ||Xi(f, z)||, or +infinity at a numerically singular restricted Jacobian.
double mu_exact(const PolySystem& f, const ProjectivePoint& z);

struct MuInterval {
    double lower;
    double upper;
};

/// Bracket of mu from the l1-norm of a Householder tridiagonalization of the
/// Gram matrix of Xi: lower <= mu <= upper and upper / lower = 3^{1/4}.
MuInterval mu_bound(const PolySystem& f, const ProjectivePoint& z);

/// Matrix of Xi(f, z) in the Householder basis of z^perp (n x n).
CMatrix xi_matrix(const PolySystem& f, const ProjectivePoint& z);

/// Real symmetric tridiagonal form of a Hermitian matrix, by Householder reduction.
struct Tridiagonal {
    RVector diagonal;
    RVector off_diagonal;  // magnitudes of the subdiagonal
    /// Maximum column l1-norm.
    double norm1() const;
};
Tridiagonal householder_tridiagonalize(const CMatrix& hermitian);

enum class MuMode { exact, bound };

/// mu_exact, or the upper end of mu_bound (infinity when singular).
double condition_number(const PolySystem& f, const ProjectivePoint& z, MuMode mode);

struct Certificate {
    double mu_at_root = 0.0;
    double proj_distance = 0.0;
    std::vector<double> contraction_ratios;  ///< d(z_k, root) / d(z_0, root), k = 1 .. iters-1
    std::vector<double> ratio_bounds;        ///< 2^{1 - 2^k}
    bool passed = false;
    ProjectivePoint refined_root{CVector::Ones(1)};

    /// D^{3/2} mu(f, root) d(z, root)
    double gamma_product(int D) const;
};

/// Refines z with `iters` Newton steps and checks the mu-theorem hypothesis
/// D^{3/2} mu d <= 1/3 at the refined root, along with the quadratic
/// contraction of the intermediate iterates.
Certificate certify_root(const PolySystem& f, const ProjectivePoint& z, int iters = 6);

}  // namespace derand
