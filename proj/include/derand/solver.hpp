#pragma once

// Deterministic solver that reuses the input's own low-order digits as the
// randomness for the start pair, and the randomized baseline it derandomizes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "derand/conditioning.hpp"
#include "derand/errors.hpp"
#include "derand/homotopy.hpp"
#include "derand/randomization.hpp"

namespace derand {

enum class EntropyFallback { fail, hash };

struct SolverConfig {
    int max_rounds = 8;
    GeodesicMode geodesic = GeodesicMode::exact;
    TrigSettings trig{};
    MuMode mu_mode = MuMode::exact;
    EntropyFallback entropy_fallback = EntropyFallback::fail;
    std::uint64_t rng_seed = 0;
    std::size_t max_steps = 10'000'000;
    int certify_iters = 6;

    TrackOptions track_options() const { return {max_steps, mu_mode, geodesic}; }
};

struct RoundSummary {
    double precision = 0.0;   ///< Q_k
    double rho = 0.0;         ///< 3 sqrt(N) / Q_k
    HcStatus status = HcStatus::fail;
    std::size_t K = 0;
    double start_mu = 0.0;    ///< mu(g, eta) of the round's start pair
    double max_mu = 0.0;
    bool degenerate_kernel = false;
};

struct SolveReport {
    ProjectivePoint root{CVector::Ones(1)};
    std::size_t K_total = 0;
    int rounds = 0;
    std::vector<double> precisions;
    std::vector<RoundSummary> per_round;
    Certificate certificate;
};

class RoundsExceeded : public Error {
public:
    explicit RoundsExceeded(SolveReport partial)
        : Error("precision check failed in every round"), partial_(std::move(partial)) {}
    const SolveReport& partial() const { return partial_; }

private:
    SolveReport partial_;
};

/// Deterministic solve. Throws RoundsExceeded, or EntropyExhausted when the
/// fractional parts vanish and the fallback is `fail`.
SolveReport dbp(const PolySystem& f, const SolverConfig& cfg = {});

/// Randomized solve from a start pair drawn with cfg.rng_seed. Throws
/// RoundsExceeded (with one round) when the tracker fails.
SolveReport bp_solve(const PolySystem& f, const SolverConfig& cfg = {});

/// Fractional part of a unit real vector, or a hash-derived substitute when
/// all fractional parts are exactly zero and `mode` is hash.
RVector extract_noise(const RVector& u, double Q, EntropyFallback mode, const TrigSettings& trig = {});

/// +1 if Re <f, g> >= 0, else -1.
double orientation_sign(const SpherePoint& f, const SpherePoint& g);

/// Uniform point on S^{2N-1} as a unit system, from 2N seeded normals.
SpherePoint random_unit_system(const DegreeProfile& profile, std::uint64_t seed);

/// Stateless 64-bit mixing used to derive per-trial seeds.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

nlohmann::json certificate_to_json(const Certificate& cert, int D);
nlohmann::json report_to_json(const SolveReport& report, int D);
nlohmann::json point_to_json(const ProjectivePoint& z);

}  // namespace derand
