#include "derand/projective.hpp"

#include <cmath>
#include <numbers>

#include "derand/errors.hpp"

namespace derand {

namespace {

constexpr double kUnitTolerance = 1e-12;
constexpr double kAntipodalGap = 1e-9;
constexpr double kDegenerateAngle = 1e-9;
constexpr double kAlignedTolerance = 1e-12;

// Angle between unit vectors from the chord lengths; accurate at both ends of [0, pi].
double chord_angle(double minus_norm, double plus_norm) { return 2.0 * std::atan2(minus_norm, plus_norm); }

}  // namespace

SpherePoint::SpherePoint(PolySystem f) : f_(std::move(f)) {
    if (std::abs(weyl_norm(f_) - 1.0) > kUnitTolerance) throw ContractViolation("system is not on the unit sphere");
}

SpherePoint SpherePoint::normalize(const PolySystem& f) {
    double nrm = weyl_norm(f);
    if (!(nrm > 0.0) || !std::isfinite(nrm)) throw ContractViolation("cannot normalize the zero system");
    return SpherePoint(Complex(1.0 / nrm, 0.0) * f, Unchecked{});
}

SpherePoint SpherePoint::assume_unit(PolySystem f) { return SpherePoint(std::move(f), Unchecked{}); }

ProjectivePoint::ProjectivePoint(const CVector& v) {
    double nrm = v.norm();
    if (!(nrm > 0.0) || !std::isfinite(nrm)) throw ContractViolation("projective point needs a nonzero finite vector");
    rep_ = v / nrm;
}

double dist_sphere(const SpherePoint& f, const SpherePoint& g) {
    return chord_angle(weyl_norm(f.system() - g.system()), weyl_norm(f.system() + g.system()));
}

double dist_sphere(const RVector& u, const RVector& v) { return chord_angle((u - v).norm(), (u + v).norm()); }

double dist_proj(const ProjectivePoint& x, const ProjectivePoint& y) {
    Complex p = y.rep().dot(x.rep());  // <x, y> = sum x_j conj(y_j)
    double a = std::abs(p);
    if (a == 0.0) return std::numbers::pi / 2;
    CVector aligned = (p / a) * y.rep();
    return chord_angle((x.rep() - aligned).norm(), (x.rep() + aligned).norm());
}

double dist_proj(const SpherePoint& f, const SpherePoint& g) {
    Complex p = weyl_inner(f.system(), g.system());
    double a = std::abs(p);
    if (a == 0.0) return std::numbers::pi / 2;
    PolySystem aligned = (p / a) * g.system();
    return chord_angle(weyl_norm(f.system() - aligned), weyl_norm(f.system() + aligned));
}

SpherePoint geodesic(const SpherePoint& g, const SpherePoint& f, double t, GeodesicMode mode) {
    double alpha = dist_sphere(f, g);
    if (alpha >= std::numbers::pi - kAntipodalGap) throw AntipodalEndpoints();
    if (alpha <= kDegenerateAngle) return g;
    if (mode == GeodesicMode::chord) {
        return SpherePoint::normalize(t * f.system() + (1.0 - t) * g.system());
    }
    double s = std::sin(alpha);
    return SpherePoint::assume_unit((std::sin((1.0 - t) * alpha) / s) * g.system() +
                                    (std::sin(t * alpha) / s) * f.system());
}

CMatrix standard_unitary(const ProjectivePoint& zeta) {
    const Eigen::Index dim = zeta.size();
    CMatrix u = CMatrix::Identity(dim, dim);
    const CVector& z = zeta.rep();
    Complex alpha = z(0);
    if (std::abs(alpha) >= 1.0 - kAlignedTolerance) return u;

    CVector rest = z;
    rest(0) = 0.0;
    double beta = rest.norm();
    CVector w = rest / beta;

    // On span{e_0, w}: e_0 -> alpha e_0 + beta w, w -> -beta e_0 + conj(alpha) w.
    CVector e0 = CVector::Zero(dim);
    e0(0) = 1.0;
    u += (alpha - 1.0) * e0 * e0.adjoint();
    u += -beta * e0 * w.adjoint();
    u += beta * w * e0.adjoint();
    u += (std::conj(alpha) - 1.0) * w * w.adjoint();
    return u;
}

}  // namespace derand
