#ifndef L3G_CONFIG_SEARCH_HPP
#define L3G_CONFIG_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "l3g/bowtie.hpp"
#include "l3g/common.hpp"
#include "l3g/triple_system.hpp"

namespace l3g {

/// A set of hyperedge indices together with its span (the union of their
/// vertex sets). Both lists are sorted ascending.
struct Configuration {
    std::vector<EdgeId> edge_indices;
    std::vector<VertexId> span;

    int k() const { return static_cast<int>(edge_indices.size()); }
    int span_size() const { return static_cast<int>(span.size()); }
};

/// Builds a Configuration from edge indices, computing the span. Throws
/// errc::bad_index for indices outside H.
Configuration make_configuration(const LinearTripleSystem& h,
                                 std::vector<EdgeId> edge_indices);

/// Ground truth for every search result: |edges| == k and |span| <= s.
bool is_config(const LinearTripleSystem& h, const std::vector<EdgeId>& edge_indices,
               int s, int k);

/// The three hyperedges behind a bow-tie edge form a configuration of 3
/// edges spanning exactly 6 vertices. Throws errc::bad_argument when
/// (bi, bj) is not an edge of B.
Configuration seed_from_bowtie_edge(const LinearTripleSystem& h, const BowtieGraph& b,
                                    BIndex bi, BIndex bj);

struct SearchBudget {
    Count max_nodes = 10'000'000;
    Count max_millis = 60'000;
};

struct GreedyResult {
    bool success = false;
    Configuration reached;  // the witness on success, else the maximal configuration
    Count steps = 0;
};

/// Repeatedly adds an absent hyperedge meeting the current span in >= 2
/// vertices (so each step grows the span by at most 1 and preserves
/// |span| <= |edges| + 3). Candidate order: 3-vertex intersections first,
/// then 2, ties by ascending edge index. rng_seed is reserved for
/// randomized restarts and currently unused.
GreedyResult greedy_extend(const LinearTripleSystem& h, const Configuration& seed, int k,
                           std::uint64_t rng_seed = 0);

enum class SearchOutcome { found, not_found, indeterminate };

struct ExhaustiveResult {
    SearchOutcome outcome = SearchOutcome::not_found;
    Configuration witness;  // valid iff outcome == found
    Count nodes = 0;
};

/// Branch-and-bound over edge subsets in ascending index order,
/// include-before-exclude, so the first witness is the lexicographically
/// first one. Pruning is the span test alone: the span only grows when
/// edges are added, so a partial set whose span already exceeds s cannot
/// extend to a set of span <= s, and no extendable subset is ever pruned.
ExhaustiveResult exhaustive_search(const LinearTripleSystem& h, int k, int s,
                                   const SearchBudget& budget);

struct ComponentSearchResult {
    bool success = false;
    Configuration best;  // witness on success, else largest configuration reached
    Count seeds_tried = 0;
    Count nodes_used = 0;  // seeds plus greedy steps, charged against max_nodes
    bool budget_exhausted = false;
};

/// Greedy extension from every bow-tie edge inside the component, in
/// ascending (i, j) order, until success, seed exhaustion, or budget
/// exhaustion. Successful results are re-verified with is_config.
ComponentSearchResult component_guided_search(const LinearTripleSystem& h,
                                              const BowtieGraph& b, const Component& comp,
                                              int k, const SearchBudget& budget);

}  // namespace l3g

#endif
