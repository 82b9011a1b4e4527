#include "derand/randomization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "derand/detail/dense_poly.hpp"
#include "derand/errors.hpp"

namespace derand {

namespace {

constexpr double kMantissaLimit = 9007199254740992.0;  // 2^53
// Q x this close to an integer is taken as that integer, so that lattice
// points survive the rounding of a renormalization.
constexpr double kLatticeSnapUlps = 4.0;
constexpr double kKernelGap = 1e-10;
constexpr double kPhaseThreshold = 1e-12;

std::pair<double, double> unit_circle(double x, const TrigSettings& trig, std::size_t N) {
    if (trig.mode == TrigMode::bss) return trig_poly(x, trig.order_for(N));
    double angle = 2.0 * std::numbers::pi * x;
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

std::pair<double, double> floor_frac_unit(double x, double Q) {
    if (!(Q > 0.0)) throw ContractViolation("precision must be positive");
    double qx = Q * x;
    if (!std::isfinite(qx) || std::abs(qx) >= kMantissaLimit) return {x, 0.0};
    double whole = std::floor(qx);
    double nearest = std::nearbyint(qx);
    if (std::abs(qx - nearest) <= kLatticeSnapUlps * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(qx)))
        whole = nearest;
    return {whole / Q, std::max(0.0, qx - whole)};
}

FaceCoords face_decompose(const RVector& u) {
    if (u.size() < 2) throw ContractViolation("face decomposition needs at least two coordinates");
    Eigen::Index face = 0;
    double m = std::abs(u(0));
    for (Eigen::Index j = 1; j < u.size(); ++j) {
        if (std::abs(u(j)) > m) {
            m = std::abs(u(j));
            face = j;
        }
    }
    if (!(m > 0.0)) throw ContractViolation("cannot decompose the zero vector");

    FaceCoords fc;
    fc.face_index = static_cast<int>(face);
    fc.sign = u(face) > 0.0 ? 1 : -1;
    fc.coords.resize(u.size() - 1);
    const double below_one = std::nextafter(1.0, -1.0);
    Eigen::Index k = 0;
    for (Eigen::Index j = 0; j < u.size(); ++j) {
        if (j == face) continue;
        double v = u(j) / m;
        fc.coords(k++) = v >= 1.0 ? below_one : v;
    }
    return fc;
}

RVector face_recompose(const FaceCoords& fc) {
    RVector x(fc.coords.size() + 1);
    Eigen::Index k = 0;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        x(j) = j == fc.face_index ? static_cast<double>(fc.sign) : fc.coords(k++);
    }
    return x;
}

int TrigSettings::order_for(std::size_t N) const {
    if (taylor_order > 0) return taylor_order;
    return static_cast<int>(std::ceil(std::log(static_cast<double>(N)))) + 20;
}

RVector sibuya(const RVector& x, const TrigSettings& trig) {
    if (x.size() < 1 || x.size() % 2 == 0) throw ContractViolation("sibuya input must have odd length 2N-1");
    const Eigen::Index N = (x.size() + 1) / 2;
    std::vector<double> y;
    y.reserve(static_cast<std::size_t>(N) + 1);
    y.push_back(0.0);
    for (Eigen::Index j = N; j < x.size(); ++j) y.push_back(x(j));
    std::sort(y.begin() + 1, y.end());
    y.push_back(1.0);

    RVector out(2 * N);
    for (Eigen::Index i = 0; i < N; ++i) {
        double r = std::sqrt(y[static_cast<std::size_t>(i) + 1] - y[static_cast<std::size_t>(i)]);
        auto [c, s] = unit_circle(x(i), trig, static_cast<std::size_t>(N));
        out(2 * i) = r * c;
        out(2 * i + 1) = r * s;
    }
    return out;
}

RVector fractional_parts(const RVector& u, double Q) {
    FaceCoords fc = face_decompose(u);
    RVector b(fc.coords.size());
    for (Eigen::Index j = 0; j < b.size(); ++j) b(j) = floor_frac_unit(fc.coords(j), Q).second;
    return b;
}

RVector sphere_floor(const RVector& u, double Q) {
    FaceCoords fc = face_decompose(u);
    for (Eigen::Index j = 0; j < fc.coords.size(); ++j) fc.coords(j) = floor_frac_unit(fc.coords(j), Q).first;
    RVector x = face_recompose(fc);
    return x / x.norm();
}

RVector sphere_frac(const RVector& u, double Q, const TrigSettings& trig) { return sibuya(fractional_parts(u, Q), trig); }

std::vector<Complex> trig_taylor_coefficients(int Q) {
    if (Q < 1) throw ContractViolation("Taylor order must be positive");
    const Complex two_i_pi(0.0, 2.0 * std::numbers::pi);
    std::vector<Complex> u(static_cast<std::size_t>(Q) + 1);
    u[0] = 0.0;
    u[1] = -two_i_pi;
    // (k+2) u_{k+2} = (2 i pi + k + 2) u_{k+1} - 2 i pi u_k
    for (int k = 0; k + 2 <= Q; ++k) {
        auto kk = static_cast<std::size_t>(k);
        u[kk + 2] = ((two_i_pi + static_cast<double>(k + 2)) * u[kk + 1] - two_i_pi * u[kk]) / static_cast<double>(k + 2);
    }
    return u;
}

std::pair<double, double> trig_poly(double x, int Q) {
    if (Q < 2) throw ContractViolation("Taylor order must be at least 2");
    auto u = trig_taylor_coefficients(Q);
    Complex F(0.0, 0.0);
    for (auto it = u.rbegin(); it != u.rend(); ++it) F = F * x + *it;
    Complex w = 1.0 + (x - 1.0) * F;
    double r = std::abs(w);
    return {w.real() / r, w.imag() / r};
}

BpSplit bp_split(const SpherePoint& f_unit) {
    const PolySystem& f = f_unit.system();
    const auto& prof = f.profile();
    const int n = prof.n();
    BpSplit split{CVector::Zero(n), CMatrix::Zero(n, n), f};
    Exponents e(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        const int d = prof.degree(i);
        const auto& basis = prof.basis(i);
        auto rest = split.fprime.coeffs(i);

        std::fill(e.begin(), e.end(), 0);
        e[0] = d;
        std::size_t idx = basis.index_of(e);
        split.c(i) = rest[idx];
        rest[idx] = 0.0;

        const double root_d = std::sqrt(static_cast<double>(d));
        for (int j = 1; j <= n; ++j) {
            std::fill(e.begin(), e.end(), 0);
            e[0] = d - 1;
            e[static_cast<std::size_t>(j)] = 1;
            idx = basis.index_of(e);
            split.a(i, j - 1) = rest[idx] / root_d;
            rest[idx] = 0.0;
        }
    }
    return split;
}

CMatrix bp_matrix(const BpSplit& split) {
    const Eigen::Index n = split.a.rows();
    CMatrix M(n, n + 1);
    M.leftCols(n) = split.a;
    M.col(n) = split.c;
    return M;
}

CVector kernel_vector(const CMatrix& M) {
    const Eigen::Index n = M.rows();
    if (M.cols() != n + 1) throw ContractViolation("kernel_vector expects an n x (n+1) matrix");
    Eigen::JacobiSVD<CMatrix> svd(M, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    if (!(s(n - 1) > kKernelGap)) throw DegenerateKernel();
    CVector k = svd.matrixV().col(n);
    k /= k.norm();
    const double cutoff = kPhaseThreshold * k.cwiseAbs().maxCoeff();
    for (Eigen::Index j = 0; j < k.size(); ++j) {
        double a = std::abs(k(j));
        if (a > cutoff) {
            k *= std::conj(k(j)) / a;
            k(j) = a;
            break;
        }
    }
    return k;
}

PolySystem psi_expand(const CMatrix& M, const CVector& zetap, const DegreeProfile& profile) {
    const int n = profile.n();
    if (M.rows() != n || M.cols() != n + 1 || zetap.size() != n + 1)
        throw ContractViolation("psi_expand: shapes do not match the profile");
    std::vector<Complex> pairing(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) pairing[static_cast<std::size_t>(j)] = std::conj(zetap(j));
    auto inner = detail::linear_form(pairing);

    PolySystem out(profile);
    std::vector<Complex> row(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) {
        const int d = profile.degree(i);
        for (int j = 0; j <= n; ++j) row[static_cast<std::size_t>(j)] = M(i, j);
        auto term = detail::multiply(detail::power(inner, d - 1), detail::linear_form(row));
        const double root_d = std::sqrt(static_cast<double>(d));
        auto dst = out.coeffs(i);
        for (std::size_t k = 0; k < term.coeffs.size(); ++k) dst[k] = root_d * term.coeffs[k];
    }
    return out;
}

BpPair bp(const SpherePoint& u) {
    const auto& prof = u.profile();
    BpSplit split = bp_split(u);
    CMatrix M = bp_matrix(split);
    CVector zetap = kernel_vector(M);
    ProjectivePoint zeta(zetap);
    CMatrix unitary = standard_unitary(zeta);
    PolySystem g = compose_linear(split.fprime, unitary.adjoint()) + psi_expand(M, zetap, prof);
    return {SpherePoint::assume_unit(std::move(g)), std::move(zeta)};
}

}  // namespace derand
