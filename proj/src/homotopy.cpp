#include "derand/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "derand/errors.hpp"

namespace derand {

namespace {

constexpr double kDegeneratePath = 1e-12;
constexpr double kRootTolerance = 1e-10;
constexpr double kLostRootResidual = 1e-8;
constexpr int kOracleCorrections = 3;

double d32(const DegreeProfile& prof) { return std::pow(static_cast<double>(prof.D()), 1.5); }

double step_length(double d32, double mu, double alpha) {
    return 1.0 / (StepConstants::step_denominator * d32 * mu * mu * alpha);
}

void record(PathTrace& trace, double t, double mu) {
    trace.steps.push_back({t, mu});
    trace.max_mu = std::max(trace.max_mu, mu);
}

HcOutcome failed(PathTrace trace) { return {HcStatus::fail, std::nullopt, std::move(trace)}; }

HcOutcome succeeded(ProjectivePoint z, PathTrace trace) { return {HcStatus::success, std::move(z), std::move(trace)}; }

// Shared loop of both trackers. `rho` <= 0 disables the precision check.
HcOutcome track(const SpherePoint& f, const SpherePoint& g, ProjectivePoint z, double rho, const TrackOptions& opts) {
    const double scale = d32(f.profile());
    const bool checked = rho > 0.0;
    auto check_ok = [&](double mu) { return !checked || precision_check_passes(f.profile().D(), mu, rho); };

    PathTrace trace;
    double mu = condition_number(g.system(), z, opts.mu_mode);
    trace.start_mu = mu;
    trace.max_mu = mu;
    if (!std::isfinite(mu)) return failed(std::move(trace));

    const double alpha = dist_sphere(f, g);
    if (alpha <= kDegeneratePath) {
        if (!check_ok(mu)) return failed(std::move(trace));
        return succeeded(std::move(z), std::move(trace));
    }

    double t = step_length(scale, mu, alpha);
    while (1.0 > t && check_ok(mu)) {
        if (trace.K() >= opts.max_steps) return failed(std::move(trace));
        SpherePoint h = geodesic(g, f, t, opts.geodesic);
        try {
            z = newton_step(h.system(), z);
        } catch (const SingularJacobian&) {
            return failed(std::move(trace));
        }
        mu = condition_number(h.system(), z, opts.mu_mode);
        record(trace, t, mu);
        if (!std::isfinite(mu)) return failed(std::move(trace));
        t += step_length(scale, mu, alpha);
    }
    if (!check_ok(mu)) return failed(std::move(trace));
    return succeeded(std::move(z), std::move(trace));
}

}  // namespace

bool precision_check_passes(int D, double mu, double rho) {
    return std::pow(static_cast<double>(D), 1.5) * mu * mu * rho <= StepConstants::fail_threshold;
}

HcOutcome hc(const SpherePoint& f, const SpherePoint& g, const ProjectivePoint& z, const TrackOptions& opts) {
    return track(f, g, z, 0.0, opts);
}

HcOutcome hc_checked(const SpherePoint& fprime, const SpherePoint& g, const ProjectivePoint& z, double rho,
                     const TrackOptions& opts) {
    if (!(rho > 0.0)) throw ContractViolation("precision radius must be positive");
    return track(fprime, g, z, rho, opts);
}

PathOracleResult path_oracle(const SpherePoint& f, const SpherePoint& g, const ProjectivePoint& eta,
                             const std::vector<double>& pvals, int resolution, GeodesicMode mode) {
    if (resolution < 1000) throw ContractViolation("oracle resolution must be at least 1000");
    if (evaluate(g.system(), eta.rep()).norm() > kRootTolerance) throw NotARoot();

    PathOracleResult result;
    auto lost = [&] {
        result.tracked = false;
        result.M_hat = std::numeric_limits<double>::infinity();
        for (double p : pvals) result.I_hat[p] = std::numeric_limits<double>::infinity();
        return result;
    };

    std::vector<double> mus;
    mus.reserve(static_cast<std::size_t>(resolution) + 1);
    ProjectivePoint z = eta;
    mus.push_back(mu_exact(g.system(), z));
    for (int i = 1; i <= resolution; ++i) {
        double t = static_cast<double>(i) / resolution;
        SpherePoint h = geodesic(g, f, t, mode);
        try {
            for (int c = 0; c < kOracleCorrections; ++c) z = newton_step(h.system(), z);
        } catch (const SingularJacobian&) {
            return lost();
        }
        if (evaluate(h.system(), z.rep()).norm() > kLostRootResidual) return lost();
        double mu = mu_exact(h.system(), z);
        if (!std::isfinite(mu)) return lost();
        mus.push_back(mu);
    }

    result.tracked = true;
    result.M_hat = *std::max_element(mus.begin(), mus.end());
    const double dt = 1.0 / resolution;
    for (double p : pvals) {
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < mus.size(); ++i) acc += 0.5 * (std::pow(mus[i], p) + std::pow(mus[i + 1], p));
        result.I_hat[p] = acc * dt;
    }
    return result;
}

}  // namespace derand
