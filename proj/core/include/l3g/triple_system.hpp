#ifndef L3G_TRIPLE_SYSTEM_HPP
#define L3G_TRIPLE_SYSTEM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "l3g/common.hpp"
#include "l3g/rational.hpp"

namespace l3g {

/// Three distinct vertex ids in strictly ascending order.
struct Triple {
    std::array<VertexId, 3> v;

    VertexId a() const { return v[0]; }
    VertexId b() const { return v[1]; }
    VertexId c() const { return v[2]; }

    bool contains(VertexId x) const { return v[0] == x || v[1] == x || v[2] == x; }

    /// Number of common vertices with another triple (0..3).
    int shared_count(const Triple& o) const {
        int s = 0;
        for (VertexId x : v) s += o.contains(x) ? 1 : 0;
        return s;
    }

    /// The unique common vertex; only valid when shared_count(o) == 1.
    VertexId shared_vertex(const Triple& o) const {
        for (VertexId x : v)
            if (o.contains(x)) return x;
        fail(errc::internal_check_failed, "shared_vertex on disjoint triples");
    }

    friend bool operator==(const Triple& x, const Triple& y) { return x.v == y.v; }
    friend bool operator<(const Triple& x, const Triple& y) { return x.v < y.v; }
};

/// A 3-uniform hypergraph in which any two edges share at most one vertex.
/// Immutable after construction; construction validates linearity by
/// building the pair->edge index (every unordered vertex pair is covered
/// by at most one triple).
class LinearTripleSystem {
public:
    /// Canonicalizes and validates raw input triples. Edge order is input
    /// order with each triple internally sorted. When source_lines is given
    /// (one entry per triple), validation errors carry that line number.
    static LinearTripleSystem validate(int n,
                                       const std::vector<std::array<std::int64_t, 3>>& raw,
                                       const std::vector<int>* source_lines = nullptr);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Triple>& edges() const { return edges_; }
    const Triple& edge(EdgeId i) const { return edges_[static_cast<std::size_t>(i)]; }

    /// Index of the unique edge covering {u, v}, or -1 when uncovered.
    EdgeId pair_edge(VertexId u, VertexId v) const {
        if (u == v) return -1;
        if (u > v) std::swap(u, v);
        return pair_to_edge_[static_cast<std::size_t>(u) * n_ + v];
    }

    bool covers_pair(VertexId u, VertexId v) const { return pair_edge(u, v) >= 0; }

    /// Number of edges through v.
    int degree(VertexId v) const { return degree_[static_cast<std::size_t>(v)]; }

    /// Edge indices through v, ascending.
    const std::vector<EdgeId>& edges_at(VertexId v) const {
        return incidence_[static_cast<std::size_t>(v)];
    }

    /// 3m / C(n,2), exact. Throws errc::degenerate_system when n < 2.
    Rational linear_density() const;

    /// True iff every pair is covered (m == n(n-1)/6 under linearity).
    bool is_steiner() const;

    friend bool operator==(const LinearTripleSystem& x, const LinearTripleSystem& y) {
        return x.n_ == y.n_ && x.edges_ == y.edges_;
    }

private:
    LinearTripleSystem() = default;

    int n_ = 0;
    std::vector<Triple> edges_;
    std::vector<EdgeId> pair_to_edge_;            // n*n flat, -1 = uncovered
    std::vector<int> degree_;                     // per vertex
    std::vector<std::vector<EdgeId>> incidence_;  // per vertex, ascending
};

/// Steiner triple system on n vertices (n = 1, 3 mod 6), deterministic for
/// a given n. Throws errc::inadmissible_order otherwise.
LinearTripleSystem generate_steiner(int n);

struct RandomLinearResult {
    LinearTripleSystem system;
    Rational achieved_density;
};

/// Greedily inserts uniformly random insertable triples until the density
/// target is reached or no insertable triple remains. Best-effort: the
/// caller inspects achieved_density.
RandomLinearResult generate_random_linear(int n, const Rational& target_density,
                                          std::uint64_t seed);

/// Deletes uniformly random edges while the density stays >= target.
/// Throws errc::target_above_current when the target exceeds the current
/// density.
LinearTripleSystem dilute(const LinearTripleSystem& h, const Rational& target_density,
                          std::uint64_t seed);

/// Text format: line 1 "n m", then m lines "a b c"; '#' starts a comment
/// line; vertex order within a line is free on input, ascending on output.
LinearTripleSystem parse(const std::string& text);
std::string serialize(const LinearTripleSystem& h);

}  // namespace l3g

#endif
