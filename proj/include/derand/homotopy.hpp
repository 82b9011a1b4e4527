#pragma once

// Adaptive-step homotopy continuation along great circles of the unit sphere.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "derand/conditioning.hpp"
#include "derand/projective.hpp"

namespace derand {

/// Step-size constants of the tracker.
struct StepConstants {
    static constexpr double eps = 1.0 / 13.0;
    static constexpr double A = 1.0 / 52.0;
    static constexpr double B = 1.0 / 101.0;
    static constexpr double Bprime = 1.0 / 65.0;
    static constexpr double fail_threshold = 1.0 / 151.0;
    static constexpr int cert_A_check = 52;
    static constexpr int step_denominator = 101;
};

struct TraceStep {
    double t;   ///< parameter at which the Newton step was taken
    double mu;  ///< mu(h, z) right after that step
};

struct PathTrace {
    double start_mu = 0.0;         ///< mu(g, z) at t = 0
    std::vector<TraceStep> steps;  ///< one entry per Newton step
    double max_mu = 0.0;           ///< max of start_mu and every step's mu

    std::size_t K() const { return steps.size(); }
};

enum class HcStatus { success, fail };

struct HcOutcome {
    HcStatus status = HcStatus::fail;
    std::optional<ProjectivePoint> point;
    PathTrace trace;

    bool ok() const { return status == HcStatus::success; }
};

struct TrackOptions {
    std::size_t max_steps = 10'000'000;
    MuMode mu_mode = MuMode::exact;
    GeodesicMode geodesic = GeodesicMode::exact;
};

/// Tracks the root near z of g to f. Fails on a singular Jacobian, an
/// infinite condition number, or after `max_steps` steps.
HcOutcome hc(const SpherePoint& f, const SpherePoint& g, const ProjectivePoint& z,
             const TrackOptions& opts = {});

/// hc with the precision check D^{3/2} mu(h, z)^2 rho <= 1/151 at every iteration.
HcOutcome hc_checked(const SpherePoint& fprime, const SpherePoint& g, const ProjectivePoint& z, double rho,
                     const TrackOptions& opts = {});

/// D^{3/2} mu^2 rho <= 1/151, evaluated exactly as the tracker does.
bool precision_check_passes(int D, double mu, double rho);

struct PathOracleResult {
    bool tracked = false;
    double M_hat = 0.0;               ///< max sampled mu, +infinity if the root was lost
    std::map<double, double> I_hat;   ///< p -> trapezoid estimate of the integral of mu^p
};

/// Brute-force tracking of the exact root path from eta with `resolution`
/// uniform steps in t, three Newton corrections each. Throws NotARoot when
/// ||g(eta)|| > 1e-10.
PathOracleResult path_oracle(const SpherePoint& f, const SpherePoint& g, const ProjectivePoint& eta,
                             const std::vector<double>& pvals, int resolution = 10'000,
                             GeodesicMode mode = GeodesicMode::exact);

}  // namespace derand
