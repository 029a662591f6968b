#include "l3g/config_search.hpp"

#include <algorithm>
#include <chrono>

namespace l3g {

namespace {

void check_budget(const SearchBudget& budget) {
    if (budget.max_nodes <= 0 || budget.max_millis <= 0)
        fail(errc::bad_argument, "search budget limits must be positive");
}

std::vector<VertexId> span_of(const LinearTripleSystem& h,
                              const std::vector<EdgeId>& edge_indices) {
    std::vector<VertexId> span;
    span.reserve(edge_indices.size() * 3);
    for (EdgeId e : edge_indices) {
        if (e < 0 || e >= h.m())
            fail(errc::bad_index, "edge index " + std::to_string(e) + " out of range");
        for (VertexId v : h.edge(e).v) span.push_back(v);
    }
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
    return span;
}

}  // namespace

Configuration make_configuration(const LinearTripleSystem& h,
                                 std::vector<EdgeId> edge_indices) {
    std::sort(edge_indices.begin(), edge_indices.end());
    edge_indices.erase(std::unique(edge_indices.begin(), edge_indices.end()),
                       edge_indices.end());
    if (edge_indices.empty()) fail(errc::bad_argument, "configuration needs >= 1 edge");
    Configuration c;
    c.span = span_of(h, edge_indices);
    c.edge_indices = std::move(edge_indices);
    return c;
}

bool is_config(const LinearTripleSystem& h, const std::vector<EdgeId>& edge_indices,
               int s, int k) {
    std::vector<EdgeId> sorted = edge_indices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (static_cast<int>(sorted.size()) != k) return false;
    return static_cast<int>(span_of(h, sorted).size()) <= s;
}

Configuration seed_from_bowtie_edge(const LinearTripleSystem& h, const BowtieGraph& b,
                                    BIndex bi, BIndex bj) {
    if (bi < 0 || bj < 0 || bi >= b.order() || bj >= b.order())
        fail(errc::bad_index, "bow-tie vertex index out of range");
    const auto nb = b.neighbors(bi);
    if (!std::binary_search(nb.begin(), nb.end(), bj))
        fail(errc::bad_argument, "not an edge of the bow-tie graph");

    const BowtiePair& p = b.vert(bi);
    const BowtiePair& q = b.vert(bj);
    Configuration c = make_configuration(h, {p.lo, p.hi, q.lo, q.hi});
    internal_check(c.k() == 3, "bow-tie edge endpoints must share one hyperedge");
    internal_check(c.span_size() <= 6, "bow-tie seed spans more than 6 vertices");
    return c;
}

GreedyResult greedy_extend(const LinearTripleSystem& h, const Configuration& seed, int k,
                           std::uint64_t /*rng_seed*/) {
    if (seed.span_size() > seed.k() + 3)
        fail(errc::bad_argument, "seed violates |span| <= |edges| + 3");
    if (k < seed.k()) fail(errc::bad_argument, "k below seed size");

    std::vector<bool> in_config(static_cast<std::size_t>(h.m()), false);
    for (EdgeId e : seed.edge_indices) in_config[static_cast<std::size_t>(e)] = true;
    std::vector<bool> in_span(static_cast<std::size_t>(h.n()), false);
    for (VertexId v : seed.span) in_span[static_cast<std::size_t>(v)] = true;

    GreedyResult result;
    result.reached = seed;
    auto& edges = result.reached.edge_indices;

    while (static_cast<int>(edges.size()) < k) {
        EdgeId best3 = -1, best2 = -1;
        for (EdgeId e = 0; e < h.m(); ++e) {
            if (in_config[static_cast<std::size_t>(e)]) continue;
            const Triple& t = h.edge(e);
            const int inter = (in_span[static_cast<std::size_t>(t.a())] ? 1 : 0) +
                              (in_span[static_cast<std::size_t>(t.b())] ? 1 : 0) +
                              (in_span[static_cast<std::size_t>(t.c())] ? 1 : 0);
            if (inter == 3) {
                best3 = e;
                break;  // ascending scan: first 3-intersection wins outright
            }
            if (inter == 2 && best2 < 0) best2 = e;
        }
        const EdgeId pick = best3 >= 0 ? best3 : best2;
        if (pick < 0) break;

        in_config[static_cast<std::size_t>(pick)] = true;
        edges.push_back(pick);
        for (VertexId v : h.edge(pick).v)
            if (!in_span[static_cast<std::size_t>(v)]) {
                in_span[static_cast<std::size_t>(v)] = true;
                result.reached.span.push_back(v);
            }
        ++result.steps;
        internal_check(result.reached.span_size() <= result.reached.k() + 3,
                       "greedy extension broke the span invariant");
    }

    std::sort(edges.begin(), edges.end());
    std::sort(result.reached.span.begin(), result.reached.span.end());
    result.success = static_cast<int>(edges.size()) == k;
    return result;
}

ExhaustiveResult exhaustive_search(const LinearTripleSystem& h, int k, int s,
                                   const SearchBudget& budget) {
    check_budget(budget);
    if (k < 1) fail(errc::bad_argument, "k must be >= 1");

    ExhaustiveResult result;
    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::milliseconds(budget.max_millis);

    std::vector<EdgeId> chosen;
    std::vector<int> cover(static_cast<std::size_t>(h.n()), 0);
    int span = 0;
    bool out_of_budget = false;

    // DFS over indices, include-before-exclude. Sound pruning only:
    //  - span > s: adding edges never shrinks the span, so every superset
    //    fails too;
    //  - fewer edges remain than are still needed.
    auto dfs = [&](auto&& self, EdgeId pos) -> bool {
        if (++result.nodes >= budget.max_nodes) {
            out_of_budget = true;
            return false;
        }
        if ((result.nodes & 0xfff) == 0 && std::chrono::steady_clock::now() >= deadline) {
            out_of_budget = true;
            return false;
        }
        if (span > s) return false;
        if (static_cast<int>(chosen.size()) == k) {
            result.witness = make_configuration(h, chosen);
            return true;
        }
        const int needed = k - static_cast<int>(chosen.size());
        if (h.m() - pos < needed) return false;

        // include pos
        chosen.push_back(pos);
        for (VertexId v : h.edge(pos).v)
            if (cover[static_cast<std::size_t>(v)]++ == 0) ++span;
        if (self(self, pos + 1)) return true;
        chosen.pop_back();
        for (VertexId v : h.edge(pos).v)
            if (--cover[static_cast<std::size_t>(v)] == 0) --span;
        if (out_of_budget) return false;

        // exclude pos
        return self(self, pos + 1);
    };

    const bool found = h.m() > 0 && k <= h.m() ? dfs(dfs, 0) : false;
    if (found)
        result.outcome = SearchOutcome::found;
    else
        result.outcome = out_of_budget ? SearchOutcome::indeterminate
                                       : SearchOutcome::not_found;
    return result;
}

ComponentSearchResult component_guided_search(const LinearTripleSystem& h,
                                              const BowtieGraph& b, const Component& comp,
                                              int k, const SearchBudget& budget) {
    check_budget(budget);
    ComponentSearchResult result;
    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::milliseconds(budget.max_millis);

    for (BIndex i : comp.members) {
        for (BIndex j : b.neighbors(i)) {
            if (j <= i) continue;
            if (result.nodes_used >= budget.max_nodes ||
                std::chrono::steady_clock::now() >= deadline) {
                result.budget_exhausted = true;
                return result;
            }
            ++result.seeds_tried;
            const Configuration seed = seed_from_bowtie_edge(h, b, i, j);
            GreedyResult g = greedy_extend(h, seed, k);
            result.nodes_used += 1 + g.steps;
            if (g.success) {
                internal_check(is_config(h, g.reached.edge_indices, k + 3, k),
                               "greedy witness failed verification");
                result.success = true;
                result.best = std::move(g.reached);
                return result;
            }
            if (g.reached.k() > result.best.k()) result.best = std::move(g.reached);
        }
    }
    return result;
}

}  // namespace l3g
