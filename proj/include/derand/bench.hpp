#pragma once

// Seeded Monte Carlo harness over uniformly random unit systems.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "derand/solver.hpp"

namespace derand {

enum class BenchKind { steps, mu, omega, paths };

BenchKind parse_bench_kind(const std::string& name);

struct BenchOptions {
    BenchKind kind = BenchKind::steps;
    int trials = 100;
    std::uint64_t seed = 0;
    int n = 2;
    std::vector<int> degrees{2, 2};
    int jobs = 1;
    int oracle_resolution = 10'000;
    SolverConfig solver{};
};

/// Extra per-path quantities for kind = paths.
struct PathColumns {
    double d_sphere = 0.0;
    double I2_hat = 0.0;
    double I3_hat = 0.0;
    double M_hat = 0.0;
    double M_tilde = 0.0;
};

struct BenchRow {
    int trial = 0;
    int n = 0;
    int D = 0;
    std::size_t N = 0;
    std::size_t K = 0;
    int rounds = 0;
    double mu_start_sq = 0.0;
    double seconds = 0.0;
    bool certified = false;
    std::optional<PathColumns> path;
};

/// One row per trial, in trial order whatever the job count.
std::vector<BenchRow> run_bench(const BenchOptions& opts);
BenchRow run_trial(const BenchOptions& opts, int trial);

/// Header `trial,n,D,N,K,rounds,mu_start_sq,seconds,certified`, with path
/// columns appended for path rows. `with_seconds = false` blanks the timing column.
void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out, bool with_seconds = true);

}  // namespace derand
