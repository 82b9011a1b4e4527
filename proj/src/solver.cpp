#include "derand/solver.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <random>

#include <openssl/evp.h>

namespace derand {

namespace {

using nlohmann::json;

// Expands (u, Q) into `count` reals in [0, 1) with SHA-256 in counter mode.
RVector hashed_uniforms(const RVector& u, double Q, Eigen::Index count) {
    std::vector<unsigned char> message(static_cast<std::size_t>(u.size()) * sizeof(double) + sizeof(double) + 4);
    std::memcpy(message.data(), u.data(), static_cast<std::size_t>(u.size()) * sizeof(double));
    std::memcpy(message.data() + u.size() * static_cast<Eigen::Index>(sizeof(double)), &Q, sizeof(double));
    const std::size_t counter_pos = message.size() - 4;

    RVector out(count);
    Eigen::Index filled = 0;
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    for (std::uint32_t block = 0; filled < count; ++block) {
        for (int b = 0; b < 4; ++b) message[counter_pos + static_cast<std::size_t>(b)] = static_cast<unsigned char>(block >> (8 * b));
        unsigned int len = 0;
        if (EVP_Digest(message.data(), message.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
            throw Error("SHA-256 digest failed");
        for (unsigned int off = 0; off + 8 <= len && filled < count; off += 8) {
            std::uint64_t word = 0;
            for (int b = 0; b < 8; ++b) word = (word << 8) | digest[off + static_cast<unsigned int>(b)];
            out(filled++) = static_cast<double>(word >> 11) * 0x1.0p-53;
        }
    }
    return out;
}

RoundSummary summarize(double Q, double rho, const HcOutcome& outcome) {
    RoundSummary rs;
    rs.precision = Q;
    rs.rho = rho;
    rs.status = outcome.status;
    rs.K = outcome.trace.K();
    rs.start_mu = outcome.trace.start_mu;
    rs.max_mu = outcome.trace.max_mu;
    return rs;
}

void finish(SolveReport& rep, const SpherePoint& target, const ProjectivePoint& z, const SolverConfig& cfg) {
    rep.root = z;
    rep.certificate = certify_root(target.system(), z, cfg.certify_iters);
}

}  // namespace

double orientation_sign(const SpherePoint& f, const SpherePoint& g) {
    return weyl_inner(f.system(), g.system()).real() >= 0.0 ? 1.0 : -1.0;
}

RVector extract_noise(const RVector& u, double Q, EntropyFallback mode, const TrigSettings& trig) {
    RVector b = fractional_parts(u, Q);
    if (!b.isZero(0.0)) return sibuya(b, trig);
    if (mode == EntropyFallback::fail) throw EntropyExhausted();
    return sibuya(hashed_uniforms(u, Q, b.size()), trig);
}

SolveReport dbp(const PolySystem& f, const SolverConfig& cfg) {
    if (cfg.max_rounds < 1) throw ContractViolation("max_rounds must be at least 1");
    const SpherePoint target = SpherePoint::normalize(f);
    const DegreeProfile& prof = target.profile();
    const double N = static_cast<double>(prof.N());
    const RVector u = to_real_coords(target.system());
    const TrackOptions opts = cfg.track_options();

    SolveReport rep;
    double Q = N;
    for (int round = 1; round <= cfg.max_rounds; ++round) {
        Q = Q * Q;
        if (!std::isfinite(Q)) break;
        const double rho = 3.0 * std::sqrt(N) / Q;
        rep.precisions.push_back(Q);
        rep.rounds = round;

        SpherePoint truncated = SpherePoint::assume_unit(from_real_coords(sphere_floor(u, Q), prof));
        RVector noise = extract_noise(u, Q, cfg.entropy_fallback, cfg.trig);

        std::optional<BpPair> start;
        try {
            start = bp(SpherePoint::assume_unit(from_real_coords(noise, prof)));
        } catch (const DegenerateKernel&) {
            RoundSummary rs;
            rs.precision = Q;
            rs.rho = rho;
            rs.degenerate_kernel = true;
            rep.per_round.push_back(rs);
            continue;
        }
        SpherePoint g = orientation_sign(target, start->g) < 0.0 ? -start->g : start->g;

        HcOutcome outcome = hc_checked(truncated, g, start->zeta, rho, opts);
        rep.per_round.push_back(summarize(Q, rho, outcome));
        rep.K_total += outcome.trace.K();
        if (outcome.ok()) {
            finish(rep, target, *outcome.point, cfg);
            return rep;
        }
    }
    throw RoundsExceeded(std::move(rep));
}

SolveReport bp_solve(const PolySystem& f, const SolverConfig& cfg) {
    const SpherePoint target = SpherePoint::normalize(f);
    BpPair start = bp(random_unit_system(target.profile(), cfg.rng_seed));
    SpherePoint g = orientation_sign(target, start.g) < 0.0 ? -start.g : start.g;

    HcOutcome outcome = hc(target, g, start.zeta, cfg.track_options());
    SolveReport rep;
    rep.rounds = 1;
    rep.K_total = outcome.trace.K();
    rep.per_round.push_back(summarize(0.0, 0.0, outcome));
    if (!outcome.ok()) throw RoundsExceeded(std::move(rep));
    finish(rep, target, *outcome.point, cfg);
    return rep;
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 finalizer over master + golden-ratio stride
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SpherePoint random_unit_system(const DegreeProfile& profile, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    RVector v(2 * static_cast<Eigen::Index>(profile.N()));
    for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = normal(rng);
    v /= v.norm();
    return SpherePoint::normalize(from_real_coords(v, profile));
}

json point_to_json(const ProjectivePoint& z) {
    json coords = json::array();
    for (Eigen::Index j = 0; j < z.size(); ++j) coords.push_back({{"re", z.rep()(j).real()}, {"im", z.rep()(j).imag()}});
    return coords;
}

json certificate_to_json(const Certificate& cert, int D) {
    return {
        {"passed", cert.passed},
        {"mu_at_root", cert.mu_at_root},
        {"proj_distance", cert.proj_distance},
        {"gamma_product", cert.gamma_product(D)},
        {"contraction_ratios", cert.contraction_ratios},
        {"ratio_bounds", cert.ratio_bounds},
        {"refined_root", point_to_json(cert.refined_root)},
    };
}

json report_to_json(const SolveReport& report, int D) {
    json rounds = json::array();
    for (const auto& rs : report.per_round) {
        rounds.push_back({
            {"precision", rs.precision},
            {"rho", rs.rho},
            {"status", rs.status == HcStatus::success ? "success" : "fail"},
            {"K", rs.K},
            {"start_mu", rs.start_mu},
            {"max_mu", rs.max_mu},
            {"degenerate_kernel", rs.degenerate_kernel},
        });
    }
    return {
        {"certified", report.certificate.passed},
        {"root", point_to_json(report.root)},
        {"K_total", report.K_total},
        {"rounds", report.rounds},
        {"precisions", report.precisions},
        {"per_round", std::move(rounds)},
        {"certificate", certificate_to_json(report.certificate, D)},
    };
}

}  // namespace derand
