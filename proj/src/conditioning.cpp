#include "derand/conditioning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "derand/errors.hpp"

namespace derand {

namespace {

constexpr double kSingularRatio = 1e-14;
// Absolute floor on certified Newton distances, scaled by mu: iterates that
// have converged only move by rounding.
constexpr double kRoundoffFloor = 1e-13;

using Svd = Eigen::JacobiSVD<CMatrix>;

bool numerically_singular(const Svd& svd) {
    const auto& s = svd.singularValues();
    if (s.size() == 0) return false;
    double smax = s(0);
    double smin = s(s.size() - 1);
    return !(smin > kSingularRatio * smax) || !std::isfinite(smax);
}

RVector degree_scaling(const DegreeProfile& prof) {
    RVector delta(prof.n());
    for (int i = 0; i < prof.n(); ++i) delta(i) = std::sqrt(static_cast<double>(prof.degree(i)));
    return delta;
}

// df(z) restricted to z^perp, in the Householder basis B.
struct RestrictedJacobian {
    CMatrix basis;
    CMatrix matrix;
};

RestrictedJacobian restricted_jacobian(const PolySystem& f, const CVector& z) {
    CMatrix B = orthonormal_complement(z);
    return {B, jacobian(f, z) * B};
}

}  // namespace

CMatrix orthonormal_complement(const CVector& z_in) {
    const Eigen::Index dim = z_in.size();
    CVector z = z_in / z_in.norm();
    Complex phase = std::abs(z(0)) > 0.0 ? z(0) / std::abs(z(0)) : Complex(1.0, 0.0);
    CVector v = z;
    v(0) += phase;
    // H = I - 2 v v^* / (v^* v) is Hermitian and unitary with H z = -phase e_0,
    // so columns 1..n of H span z^perp.
    CMatrix H = CMatrix::Identity(dim, dim) - (2.0 / v.squaredNorm()) * v * v.adjoint();
    return H.rightCols(dim - 1);
}

ProjectivePoint newton_step(const PolySystem& f, const ProjectivePoint& z) {
    auto rj = restricted_jacobian(f, z.rep());
    Svd svd(rj.matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (numerically_singular(svd)) throw SingularJacobian();
    CVector s = svd.solve(evaluate(f, z.rep()));
    return ProjectivePoint(z.rep() - rj.basis * s);
}

double mu_exact(const PolySystem& f, const ProjectivePoint& z) {
    auto rj = restricted_jacobian(f, z.rep());
    RVector delta = degree_scaling(f.profile());
    CMatrix scaled = delta.cwiseInverse().asDiagonal() * rj.matrix;
    Svd svd(scaled);
    if (numerically_singular(svd)) return std::numeric_limits<double>::infinity();
    return weyl_norm(f) / svd.singularValues()(svd.singularValues().size() - 1);
}

CMatrix xi_matrix(const PolySystem& f, const ProjectivePoint& z) {
    auto rj = restricted_jacobian(f, z.rep());
    Svd svd(rj.matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (numerically_singular(svd)) throw SingularJacobian();
    RVector delta = degree_scaling(f.profile());
    CMatrix rhs = delta.cast<Complex>().asDiagonal();
    return svd.solve(rhs);
}

double Tridiagonal::norm1() const {
    const Eigen::Index n = diagonal.size();
    double best = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        double col = std::abs(diagonal(j));
        if (j > 0) col += off_diagonal(j - 1);
        if (j + 1 < n) col += off_diagonal(j);
        best = std::max(best, col);
    }
    return best;
}

Tridiagonal householder_tridiagonalize(const CMatrix& hermitian) {
    const Eigen::Index n = hermitian.rows();
    if (hermitian.cols() != n) throw ContractViolation("tridiagonalization needs a square matrix");
    CMatrix A = hermitian;
    for (Eigen::Index k = 0; k + 2 < n; ++k) {
        const Eigen::Index m = n - k - 1;
        CVector x = A.block(k + 1, k, m, 1);
        double xnorm = x.norm();
        if (xnorm == 0.0) continue;
        Complex phase = std::abs(x(0)) > 0.0 ? x(0) / std::abs(x(0)) : Complex(1.0, 0.0);
        CVector v = x;
        v(0) += phase * xnorm;
        double vv = v.squaredNorm();
        // Two-sided application of H = I - 2 v v^* / vv on the trailing block.
        CMatrix H = CMatrix::Identity(m, m) - (2.0 / vv) * v * v.adjoint();
        A.block(k + 1, k, m, n - k) = H * A.block(k + 1, k, m, n - k);
        A.block(k, k + 1, n - k, m) = A.block(k, k + 1, n - k, m) * H;
    }
    Tridiagonal t;
    t.diagonal = A.diagonal().real();
    t.off_diagonal = RVector::Zero(std::max<Eigen::Index>(n - 1, 0));
    for (Eigen::Index j = 0; j + 1 < n; ++j) t.off_diagonal(j) = std::abs(A(j + 1, j));
    return t;
}

MuInterval mu_bound(const PolySystem& f, const ProjectivePoint& z) {
    CMatrix xi = xi_matrix(f, z);
    CMatrix gram = xi.adjoint() * xi;
    double t1 = householder_tridiagonalize(gram).norm1();
    // ||T||_1 / sqrt(3) <= ||Xi||^2 <= ||T||_1
    double upper = weyl_norm(f) * std::sqrt(t1);
    return {upper / std::pow(3.0, 0.25), upper};
}

double condition_number(const PolySystem& f, const ProjectivePoint& z, MuMode mode) {
    if (mode == MuMode::exact) return mu_exact(f, z);
    try {
        return mu_bound(f, z).upper;
    } catch (const SingularJacobian&) {
        return std::numeric_limits<double>::infinity();
    }
}

double Certificate::gamma_product(int D) const {
    return std::pow(static_cast<double>(D), 1.5) * mu_at_root * proj_distance;
}

Certificate certify_root(const PolySystem& f, const ProjectivePoint& z, int iters) {
    if (iters < 3) throw ContractViolation("certification needs at least three Newton steps");
    Certificate cert;
    std::vector<ProjectivePoint> path{z};
    try {
        for (int k = 0; k < iters; ++k) path.push_back(newton_step(f, path.back()));
    } catch (const SingularJacobian&) {
        cert.refined_root = path.back();
        cert.mu_at_root = std::numeric_limits<double>::infinity();
        cert.proj_distance = dist_proj(z, path.back());
        cert.passed = false;
        return cert;
    }
    cert.refined_root = path.back();
    cert.mu_at_root = mu_exact(f, cert.refined_root);
    cert.proj_distance = dist_proj(z, cert.refined_root);

    const double d0 = cert.proj_distance;
    const double slack = kRoundoffFloor * std::max(1.0, cert.mu_at_root);
    bool contracting = true;
    for (int k = 1; k < iters; ++k) {
        double dk = dist_proj(path[static_cast<std::size_t>(k)], cert.refined_root);
        double bound = std::pow(2.0, 1.0 - std::pow(2.0, k));
        cert.contraction_ratios.push_back(d0 > 0.0 ? dk / d0 : 0.0);
        cert.ratio_bounds.push_back(bound);
        if (dk > bound * d0 + slack) contracting = false;
    }
    cert.passed = std::isfinite(cert.mu_at_root) && contracting &&
                  cert.gamma_product(f.profile().D()) <= 1.0 / 3.0;
    return cert;
}

}  // namespace derand
