#ifndef L3G_ANALYZE_HPP
#define L3G_ANALYZE_HPP

#include <string>
#include <vector>

#include "l3g/bowtie.hpp"
#include "l3g/config_search.hpp"
#include "l3g/graph_census.hpp"
#include "l3g/rational.hpp"
#include "l3g/thresholds.hpp"
#include "l3g/triple_system.hpp"

namespace l3g {

/// One verified equality or inequality, with both sides rendered exactly
/// (integers and rationals as written, log-space quantities as decimals).
/// hard checks are the ones whose failure indicates a library bug; the
/// pipeline raises an internal error on those instead of reporting false.
struct CheckResult {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    bool hard = false;
    std::string note;
};

struct ComponentSummary {
    Count count = 0;
    Count largest_size = 0;
    Count dense_count = 0;     // |I|
    Count dense_size_sum = 0;  // sum of |C_i| over dense components
    Count up_avg_slack = 0;    // 6|B| + 2 dense_size_sum - 2e(B), >= 0
};

struct SearchSummary {
    bool attempted = false;
    Count seeds_tried = 0;
    bool budget_exhausted = false;
    int best_k = 0;  // largest configuration size reached, witness or not
};

struct AnalysisReport {
    int n = 0;
    int m = 0;
    Rational linear_density;

    TriadCensus census;

    Count b_order = 0;
    Count b_size = 0;
    int b_max_degree = 0;
    bool b_avg_defined = false;
    Rational b_avg_degree;

    std::vector<CheckResult> checks;
    ComponentSummary comps;

    std::string branch;  // "large_component", "dense_components", "no_seeds"
    int k = 0;
    Count component_bound = 0;
    Count budget_nodes = 0;
    Count budget_millis = 0;

    bool has_witness = false;
    Configuration witness;
    SearchSummary search;

    bool has_thresholds = false;  // true when linear_density > 4/5
    Thresholds thresholds;

    bool timings_enabled = false;
    std::vector<std::pair<std::string, std::int64_t>> timings_ms;

    bool all_passed() const;
};

struct AnalyzeOptions {
    int k = 4;
    Count component_bound = 0;  // 0 means the default 10(k+3)
    SearchBudget budget;
    bool run_search = true;  // false: checks only (the verify path)
    bool timings = false;    // timings make reports nondeterministic, default off
};

/// The end-to-end pipeline on one instance: census, bow-tie build, every
/// identity and bound check, component decomposition, branch selection,
/// witness search, and is_config cross-verification of any witness.
/// Checks marked hard throw errc::internal_check_failed when violated.
AnalysisReport analyze(const LinearTripleSystem& h, const AnalyzeOptions& opts);

/// Stable JSON rendering (schema field = 1, keys alphabetical, rationals
/// as "p" or "p/q" strings, 2-space indent, trailing newline).
std::string report_to_json(const AnalysisReport& r);

}  // namespace l3g

#endif
