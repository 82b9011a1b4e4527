#pragma once

// Metric geometry on the unit sphere of the system space and on P^n.

#include "derand/systems.hpp"

namespace derand {

/// A polynomial system of unit Weyl norm.
class SpherePoint {
public:
    /// Checks |weyl_norm - 1| <= 1e-12.
    explicit SpherePoint(PolySystem f);
    /// Divides by the Weyl norm. Throws ContractViolation on the zero system.
    static SpherePoint normalize(const PolySystem& f);
    /// Wraps without checking; for values that are unit by construction up to rounding.
    static SpherePoint assume_unit(PolySystem f);

    const PolySystem& system() const { return f_; }
    const DegreeProfile& profile() const { return f_.profile(); }

    SpherePoint operator-() const { return assume_unit(-1.0 * f_); }

private:
    struct Unchecked {};
    SpherePoint(PolySystem f, Unchecked) : f_(std::move(f)) {}
    PolySystem f_;
};

/// Unit representative in C^{n+1} of a point of P^n.
class ProjectivePoint {
public:
    /// Normalizes `v` to unit length. Throws ContractViolation on zero.
    explicit ProjectivePoint(const CVector& v);

    const CVector& rep() const { return rep_; }
    Eigen::Index size() const { return rep_.size(); }

private:
    CVector rep_;
};

/// Angle between two unit systems, in [0, pi].
double dist_sphere(const SpherePoint& f, const SpherePoint& g);
/// Angle between unit real vectors, in [0, pi].
double dist_sphere(const RVector& u, const RVector& v);
/// Phase-invariant angle between two points of P^n, in [0, pi/2].
double dist_proj(const ProjectivePoint& x, const ProjectivePoint& y);
/// Projective distance between two systems seen as points of P(H).
double dist_proj(const SpherePoint& f, const SpherePoint& g);

enum class GeodesicMode { exact, chord };

/// Great-circle interpolation from g (t = 0) to f (t = 1). Chord mode
/// normalizes the straight segment instead. Throws AntipodalEndpoints when f = -g.
SpherePoint geodesic(const SpherePoint& g, const SpherePoint& f, double t,
                     GeodesicMode mode = GeodesicMode::exact);

/// Determinant-one unitary sending e_0 to zeta and fixing the orthogonal
/// complement of span{e_0, zeta}.
CMatrix standard_unitary(const ProjectivePoint& zeta);

}  // namespace derand
