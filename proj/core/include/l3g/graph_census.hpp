#ifndef L3G_GRAPH_CENSUS_HPP
#define L3G_GRAPH_CENSUS_HPP

#include <vector>

#include "l3g/common.hpp"
#include "l3g/triple_system.hpp"

namespace l3g {

/// Simple undirected graph with sorted neighbor lists.
class SimpleGraph {
public:
    SimpleGraph(int n, std::vector<std::pair<VertexId, VertexId>> edge_list);

    int n() const { return n_; }
    Count e() const { return e_; }
    int degree(VertexId v) const {
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }
    const std::vector<VertexId>& neighbors(VertexId v) const {
        return adj_[static_cast<std::size_t>(v)];
    }
    bool has_edge(VertexId u, VertexId v) const;

private:
    int n_ = 0;
    Count e_ = 0;
    std::vector<std::vector<VertexId>> adj_;
};

/// Counts of induced 3-vertex subgraphs by edge count. p3 is the triangle
/// count; cherries = sum over vertices of C(deg, 2).
struct TriadCensus {
    Count p0 = 0;
    Count p1 = 0;
    Count p2 = 0;
    Count p3 = 0;
    Count cherries = 0;

    Count triangles() const { return p3; }
    Count total() const { return p0 + p1 + p2 + p3; }
};

/// Graph on the vertex set of H whose edges are the pairs covered by some
/// triple; by linearity e(U) = 3 e(H) exactly.
SimpleGraph underlying_graph(const LinearTripleSystem& h);

/// Exact triangle count via sorted-adjacency intersection over edges
/// restricted to higher-indexed endpoints.
Count count_triangles(const SimpleGraph& g);

/// Exact cherry (3-vertex path) count: sum over vertices of C(deg, 2);
/// each unordered path is counted once, at its center.
Count count_cherries(const SimpleGraph& g);

/// Fast census: p3 and cherries are counted directly, then
/// p2 = cherries - 3 p3, p1 = e(n-2) - 3 p3 - 2 p2, p0 = C(n,3) - rest.
/// Negative intermediates indicate a counting bug and throw.
TriadCensus triad_census(const SimpleGraph& g);

/// Reference census by enumerating all C(n,3) vertex triples; meant for
/// cross-checking at n <= 50.
TriadCensus triad_census_brute(const SimpleGraph& g);

/// 3 k_triangle - 2 k_cherry + e(n-2); equals p1, hence always >= 0.
Count goodman_slack(const SimpleGraph& g);

/// n * C(6e(H)/n, 2) with the real-valued binomial: the convexity lower
/// bound on cherries of the underlying graph.
double jensen_cherry_lower_bound(const LinearTripleSystem& h);

/// Exact integer form of the same bound: cherries(U) * n >= 3m(6m - n).
/// Returns (lhs, rhs) of that comparison.
std::pair<Count, Count> jensen_cherry_bound_exact(const LinearTripleSystem& h,
                                                  const SimpleGraph& u);

}  // namespace l3g

#endif
