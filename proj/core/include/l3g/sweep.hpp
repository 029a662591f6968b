#ifndef L3G_SWEEP_HPP
#define L3G_SWEEP_HPP

#include <string>
#include <vector>

#include "l3g/analyze.hpp"
#include "l3g/rational.hpp"

namespace l3g {

struct SweepRow {
    Rational delta;  // requested density, as given in the grid
    int trial = 0;
    int n = 0;
    bool dB_defined = false;
    Rational dB_avg;  // average bow-tie degree of the diluted instance
    bool witness_found = false;
    int k = 0;
    std::int64_t elapsed_ms = 0;  // stays 0 unless timings are enabled
};

struct SweepOptions {
    int n = 13;
    int k = 4;
    std::vector<Rational> grid;  // target densities, each in (0, 1]
    int trials = 1;
    std::uint64_t seed = 0;
    SearchBudget budget;
    bool timings = false;  // measured elapsed_ms makes the CSV nondeterministic
    int threads = 0;       // 0: hardware concurrency
};

/// One row per (grid density, trial): generate STS(n), dilute with the
/// per-trial seed (seed + trial index), run the full pipeline, record the
/// witness outcome and d^avg(B). Rows come back in grid-major order
/// regardless of how trials were scheduled across threads.
std::vector<SweepRow> density_sweep(const SweepOptions& opts);

/// CSV with the frozen header
/// delta,trial,n,dB_avg,witness_found,k,elapsed_ms
/// Densities and degrees print as shortest-form decimals; booleans as
/// true/false.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace l3g

#endif
