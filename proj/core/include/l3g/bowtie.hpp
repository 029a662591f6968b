#ifndef L3G_BOWTIE_HPP
#define L3G_BOWTIE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "l3g/common.hpp"
#include "l3g/graph_census.hpp"
#include "l3g/rational.hpp"
#include "l3g/triple_system.hpp"

namespace l3g {

/// A pair of intersecting hyperedges, ordered lo < hi, with the unique
/// common vertex.
struct BowtiePair {
    EdgeId lo;
    EdgeId hi;
    VertexId shared;
};

using BIndex = std::int32_t;

/// Graph whose vertices are the intersecting hyperedge pairs of a linear
/// triple system; {e,f} and {f,g} are adjacent when e,f,g pairwise share
/// exactly one vertex each and no vertex lies in all three. Vertices are
/// stored sorted by (lo, hi); adjacency is CSR with sorted neighbor lists.
class BowtieGraph {
public:
    Count order() const { return static_cast<Count>(verts_.size()); }  // |B|
    Count size() const { return e_; }                                  // e(B)

    const std::vector<BowtiePair>& verts() const { return verts_; }
    const BowtiePair& vert(BIndex i) const { return verts_[static_cast<std::size_t>(i)]; }

    /// Position of the pair {lo, hi}, or -1 when the edges do not intersect.
    BIndex find_pair(EdgeId lo, EdgeId hi) const;

    int degree(BIndex i) const {
        return static_cast<int>(offsets_[static_cast<std::size_t>(i) + 1] -
                                offsets_[static_cast<std::size_t>(i)]);
    }
    std::span<const BIndex> neighbors(BIndex i) const {
        return {adj_.data() + offsets_[static_cast<std::size_t>(i)],
                adj_.data() + offsets_[static_cast<std::size_t>(i) + 1]};
    }

    int max_degree() const;

private:
    friend BowtieGraph build_bowtie(const LinearTripleSystem& h);

    std::vector<BowtiePair> verts_;
    std::vector<std::int64_t> offsets_;
    std::vector<BIndex> adj_;
    Count e_ = 0;
};

/// Builds the bow-tie graph: vertices per shared vertex of H (all pairs of
/// hyperedges through it), edges per hyperedge label shared by two pairs.
BowtieGraph build_bowtie(const LinearTripleSystem& h);

/// Returns the maximum degree; throws an internal-consistency error when
/// it exceeds 8, which would contradict a structural fact about linear
/// systems and so indicates a construction bug.
int check_degree_bound(const BowtieGraph& b);

/// (e(B), 3 k_triangle(U) - 3 e(H)); equal for every linear H.
std::pair<Count, Count> edge_identity(const LinearTripleSystem& h, const BowtieGraph& b,
                                      const SimpleGraph& u);

/// (4|B| + 3 e(H), k_cherry(U)); equal for every linear H. Each
/// intersecting pair contributes 4 cherries not contained in a single
/// hyperedge, and each hyperedge contains 3.
std::pair<Count, Count> cherry_pair_identity(const LinearTripleSystem& h,
                                             const BowtieGraph& b, const SimpleGraph& u);

struct ComponentStats {
    int id = 0;
    Count size = 0;
    Count edges = 0;
    Rational avg_degree;  // 2 edges / size
    bool dense = false;   // avg_degree >= 6
};

struct Component {
    ComponentStats stats;
    std::vector<BIndex> members;  // ascending
};

/// Connected components, ordered by decreasing size with ties broken by
/// smallest contained vertex index; ids follow that order.
std::vector<Component> components(const BowtieGraph& b);

struct DenseCensus {
    Count dense_count = 0;        // |I|
    Count dense_small_count = 0;  // dense components with size < bound
    Count dense_size_sum = 0;     // sum of |C_i| over dense components
    std::map<Count, Count> size_histogram;  // all component sizes
};

DenseCensus dense_census(const std::vector<Component>& comps, Count size_bound);

struct AvgDegreeBound {
    Rational actual;  // 2e(B)/|B|, 0 when B is empty
    Rational bound;   // 16 - 8n/(d(n-1) - 1)
};

/// Average-degree lower bound from the cherry/pair counting chain; valid
/// whenever |B| > 0. Throws errc::degenerate_density when d(n-1) <= 1.
AvgDegreeBound avg_degree_bound(const LinearTripleSystem& h, const BowtieGraph& b);

struct SizeLowerBound {
    Count actual = 0;      // |B|
    Rational bound;        // d^2 n^3 / 16
    bool applicable = false;  // n >= 12/d
    Count pair_count = 0;  // sum over v of C(deg_H(v), 2); equals |B|
};

SizeLowerBound size_lower_bound(const LinearTripleSystem& h, const BowtieGraph& b);

/// Debug edge-list dump: header "|B| e(B)", then one "lo,hi lo',hi'" line
/// per edge. Not a stability-guaranteed format.
std::string dump_edges(const BowtieGraph& b);

}  // namespace l3g

#endif
