#include "derand/bench.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>

namespace derand {

namespace {

std::string shortest(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

void fill_from_report(BenchRow& row, const SolveReport& rep) {
    row.K = rep.K_total;
    row.rounds = rep.rounds;
    if (!rep.per_round.empty()) {
        double mu = rep.per_round.back().start_mu;
        row.mu_start_sq = mu * mu;
    }
}

void solve_trial(BenchRow& row, const BenchOptions& opts, const DegreeProfile& prof, int trial) {
    SpherePoint f = random_unit_system(prof, split_seed(opts.seed, 2 * static_cast<std::uint64_t>(trial)));
    try {
        SolveReport rep = dbp(f.system(), opts.solver);
        fill_from_report(row, rep);
        row.certified = rep.certificate.passed;
    } catch (const RoundsExceeded& e) {
        fill_from_report(row, e.partial());
    } catch (const EntropyExhausted&) {
        row.certified = false;
    }
}

void mu_trial(BenchRow& row, const BenchOptions& opts, const DegreeProfile& prof, int trial) {
    SpherePoint u = random_unit_system(prof, split_seed(opts.seed, 2 * static_cast<std::uint64_t>(trial) + 1));
    try {
        BpPair pair = bp(u);
        double mu = condition_number(pair.g.system(), pair.zeta, opts.solver.mu_mode);
        row.mu_start_sq = mu * mu;
    } catch (const DegenerateKernel&) {
        row.mu_start_sq = std::numeric_limits<double>::infinity();
    }
}

void path_trial(BenchRow& row, const BenchOptions& opts, const DegreeProfile& prof, int trial) {
    SpherePoint f = random_unit_system(prof, split_seed(opts.seed, 2 * static_cast<std::uint64_t>(trial)));
    SpherePoint u = random_unit_system(prof, split_seed(opts.seed, 2 * static_cast<std::uint64_t>(trial) + 1));
    BpPair start = bp(u);
    SpherePoint g = orientation_sign(f, start.g) < 0.0 ? -start.g : start.g;

    HcOutcome out = hc(f, g, start.zeta, opts.solver.track_options());
    row.K = out.trace.K();
    row.rounds = 1;
    row.mu_start_sq = out.trace.start_mu * out.trace.start_mu;
    if (out.ok()) row.certified = certify_root(f.system(), *out.point, opts.solver.certify_iters).passed;

    PathOracleResult oracle = path_oracle(f, g, start.zeta, {2.0, 3.0}, opts.oracle_resolution, opts.solver.geodesic);
    row.path = PathColumns{dist_sphere(f, g), oracle.I_hat[2.0], oracle.I_hat[3.0], oracle.M_hat, out.trace.max_mu};
}

}  // namespace

BenchKind parse_bench_kind(const std::string& name) {
    if (name == "steps") return BenchKind::steps;
    if (name == "mu") return BenchKind::mu;
    if (name == "omega") return BenchKind::omega;
    if (name == "paths") return BenchKind::paths;
    throw ContractViolation("unknown bench kind: " + name);
}

BenchRow run_trial(const BenchOptions& opts, int trial) {
    DegreeProfile prof(opts.n, opts.degrees);
    BenchRow row;
    row.trial = trial;
    row.n = prof.n();
    row.D = prof.D();
    row.N = prof.N();
    auto start = std::chrono::steady_clock::now();
    switch (opts.kind) {
        case BenchKind::steps:
        case BenchKind::omega:
            solve_trial(row, opts, prof, trial);
            break;
        case BenchKind::mu:
            mu_trial(row, opts, prof, trial);
            break;
        case BenchKind::paths:
            path_trial(row, opts, prof, trial);
            break;
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::vector<BenchRow> run_bench(const BenchOptions& opts) {
    if (opts.trials < 1) throw ContractViolation("trials must be at least 1");
    std::vector<BenchRow> rows(static_cast<std::size_t>(opts.trials));
    const int jobs = std::max(1, opts.jobs);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int t = next++; t < opts.trials; t = next++) rows[static_cast<std::size_t>(t)] = run_trial(opts, t);
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out, bool with_seconds) {
    bool paths = !rows.empty() && rows.front().path.has_value();
    out << "trial,n,D,N,K,rounds,mu_start_sq,seconds,certified";
    if (paths) out << ",d_sphere,I2_hat,I3_hat,M_hat,M_tilde";
    out << '\n';
    for (const auto& r : rows) {
        out << r.trial << ',' << r.n << ',' << r.D << ',' << r.N << ',' << r.K << ',' << r.rounds << ','
            << shortest(r.mu_start_sq) << ',' << (with_seconds ? shortest(r.seconds) : std::string("-")) << ','
            << (r.certified ? 1 : 0);
        if (r.path) {
            out << ',' << shortest(r.path->d_sphere) << ',' << shortest(r.path->I2_hat) << ','
                << shortest(r.path->I3_hat) << ',' << shortest(r.path->M_hat) << ',' << shortest(r.path->M_tilde);
        }
        out << '\n';
    }
}

}  // namespace derand
