#pragma once

// Truncation and fractional part of a sphere point, Sibuya sampling, and the
// construction of a random start pair (g, zeta) from one uniform sphere point.

#include <utility>
#include <vector>

#include "derand/projective.hpp"
#include "derand/systems.hpp"

namespace derand {

/// a = floor(Q x) / Q and b = Q x - floor(Q x), so that b lies in [0, 1).
/// Q x within 4 ulps of an integer k counts as k. Precisions past the
/// binary64 range of Q x give (x, 0).
std::pair<double, double> floor_frac_unit(double x, double Q);

/// A point of the sup-norm sphere written on one of its faces.
struct FaceCoords {
    int face_index = 0;  ///< 0-based coordinate pinned to +-1
    int sign = 1;
    RVector coords;      ///< remaining 2N-1 coordinates, each in [-1, 1)
};

/// Scales u to unit sup-norm and drops the pinned coordinate. Ties go to the
/// smallest index. Throws ContractViolation on the zero vector.
FaceCoords face_decompose(const RVector& u);
/// Point on the sup-norm sphere (not renormalized).
RVector face_recompose(const FaceCoords& fc);

enum class TrigMode { hardware, bss };

struct TrigSettings {
    TrigMode mode = TrigMode::hardware;
    int taylor_order = 0;  ///< truncation order for bss mode; 0 picks ceil(log N) + 20

    int order_for(std::size_t N) const;
};

/// Uniform [0,1)^{2N-1} -> uniform S^{2N-1}: angles from the first N entries,
/// radii from the sorted spacings of the last N-1.
RVector sibuya(const RVector& x, const TrigSettings& trig = {});

/// Truncation of a unit vector on the precision-Q lattice of its face, renormalized.
RVector sphere_floor(const RVector& u, double Q);
/// Sibuya image of the fractional parts on the face of u.
RVector sphere_frac(const RVector& u, double Q, const TrigSettings& trig = {});
/// Fractional parts (b-values) feeding sphere_frac.
RVector fractional_parts(const RVector& u, double Q);

/// Taylor coefficients u_0 .. u_Q of (exp(2 i pi x) - 1) / (x - 1) by the
/// three-term recurrence.
std::vector<Complex> trig_taylor_coefficients(int Q);
/// (cos 2 pi x, sin 2 pi x) from the truncated series, normalized onto the circle.
std::pair<double, double> trig_poly(double x, int Q);

struct BpSplit {
    CVector c;         ///< coefficients of x_0^{d_i}
    CMatrix a;         ///< n x n, a_{ij} = coeff(x_0^{d_i-1} x_j) / sqrt(d_i)
    PolySystem fprime; ///< remainder, vanishing to second order at e_0
};

BpSplit bp_split(const SpherePoint& f);
/// [a | c], the n x (n+1) matrix whose kernel gives the start root.
CMatrix bp_matrix(const BpSplit& split);

/// Unit kernel vector of an n x (n+1) matrix; first coordinate of modulus
/// above 1e-12 max-modulus made real positive. Throws DegenerateKernel when
/// the smallest nonzero singular value is <= 1e-10.
CVector kernel_vector(const CMatrix& M);

/// Psi_i = sqrt(d_i) <x, zeta'>^{d_i - 1} sum_j m_{ij} x_j.
PolySystem psi_expand(const CMatrix& M, const CVector& zetap, const DegreeProfile& profile);

struct BpPair {
    SpherePoint g;
    ProjectivePoint zeta;
};

/// Start pair (g, zeta) with g(zeta) = 0, distributed as a uniform system
/// with a uniform root when u is uniform on the sphere.
BpPair bp(const SpherePoint& u);

}  // namespace derand
