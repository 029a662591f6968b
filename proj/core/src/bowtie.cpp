#include "l3g/bowtie.hpp"

#include <algorithm>
#include <sstream>

namespace l3g {

BIndex BowtieGraph::find_pair(EdgeId lo, EdgeId hi) const {
    if (lo > hi) std::swap(lo, hi);
    auto it = std::lower_bound(verts_.begin(), verts_.end(), std::pair{lo, hi},
                               [](const BowtiePair& p, const std::pair<EdgeId, EdgeId>& key) {
                                   return std::pair{p.lo, p.hi} < key;
                               });
    if (it == verts_.end() || it->lo != lo || it->hi != hi) return -1;
    return static_cast<BIndex>(it - verts_.begin());
}

int BowtieGraph::max_degree() const {
    int best = 0;
    for (BIndex i = 0; i < static_cast<BIndex>(verts_.size()); ++i)
        best = std::max(best, degree(i));
    return best;
}

BowtieGraph build_bowtie(const LinearTripleSystem& h) {
    BowtieGraph b;

    // Vertices: all pairs of hyperedges through a common vertex. The shared
    // vertex of a pair is unique, so this enumeration is duplicate-free.
    for (VertexId v = 0; v < h.n(); ++v) {
        const auto& through = h.edges_at(v);
        for (std::size_t i = 0; i < through.size(); ++i)
            for (std::size_t j = i + 1; j < through.size(); ++j)
                b.verts_.push_back({through[i], through[j], v});
    }
    std::sort(b.verts_.begin(), b.verts_.end(), [](const BowtiePair& x, const BowtiePair& y) {
        return std::pair{x.lo, x.hi} < std::pair{y.lo, y.hi};
    });

    // Edges, grouped by the shared hyperedge label f: every neighbor pair
    // {e,f},{f,g} has e and g attached to distinct vertices of f and
    // sharing exactly one vertex themselves. Enumerating unordered pairs of
    // f-incident edges with distinct attach points finds each bow-tie edge
    // exactly once, because the common label of adjacent pairs is unique.
    struct Entry {
        EdgeId other;
        BIndex pair_index;
        VertexId attach;
    };
    std::vector<std::pair<BIndex, BIndex>> edge_list;
    std::vector<Entry> around;
    for (EdgeId f = 0; f < h.m(); ++f) {
        around.clear();
        const Triple& tf = h.edge(f);
        for (VertexId v : tf.v)
            for (EdgeId g : h.edges_at(v)) {
                if (g == f) continue;
                const EdgeId lo = std::min(f, g), hi = std::max(f, g);
                const BIndex idx = b.find_pair(lo, hi);
                around.push_back({g, idx, v});
            }
        for (std::size_t i = 0; i < around.size(); ++i) {
            const Triple& ti = h.edge(around[i].other);
            for (std::size_t j = i + 1; j < around.size(); ++j) {
                if (around[i].attach == around[j].attach) continue;
                if (ti.shared_count(h.edge(around[j].other)) != 1) continue;
                edge_list.emplace_back(around[i].pair_index, around[j].pair_index);
            }
        }
    }

    // CSR assembly with sorted neighbor lists.
    const std::size_t nb = b.verts_.size();
    std::vector<std::int64_t> deg(nb, 0);
    for (auto [x, y] : edge_list) {
        ++deg[static_cast<std::size_t>(x)];
        ++deg[static_cast<std::size_t>(y)];
    }
    b.offsets_.assign(nb + 1, 0);
    for (std::size_t i = 0; i < nb; ++i) b.offsets_[i + 1] = b.offsets_[i] + deg[i];
    b.adj_.resize(static_cast<std::size_t>(b.offsets_[nb]));
    std::vector<std::int64_t> cursor(b.offsets_.begin(), b.offsets_.end() - 1);
    for (auto [x, y] : edge_list) {
        b.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(x)]++)] = y;
        b.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(y)]++)] = x;
    }
    for (std::size_t i = 0; i < nb; ++i)
        std::sort(b.adj_.begin() + b.offsets_[i], b.adj_.begin() + b.offsets_[i + 1]);
    b.e_ = static_cast<Count>(edge_list.size());
    return b;
}

int check_degree_bound(const BowtieGraph& b) {
    const int d = b.max_degree();
    internal_check(d <= 8, "bow-tie degree " + std::to_string(d) + " exceeds 8");
    return d;
}

std::pair<Count, Count> edge_identity(const LinearTripleSystem& h, const BowtieGraph& b,
                                      const SimpleGraph& u) {
    return {b.size(), 3 * count_triangles(u) - 3 * static_cast<Count>(h.m())};
}

std::pair<Count, Count> cherry_pair_identity(const LinearTripleSystem& h,
                                             const BowtieGraph& b, const SimpleGraph& u) {
    return {4 * b.order() + 3 * static_cast<Count>(h.m()), count_cherries(u)};
}

std::vector<Component> components(const BowtieGraph& b) {
    const BIndex nb = static_cast<BIndex>(b.order());
    std::vector<bool> seen(static_cast<std::size_t>(nb), false);
    std::vector<Component> comps;
    std::vector<BIndex> stack;

    for (BIndex start = 0; start < nb; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        Component comp;
        stack.push_back(start);
        seen[static_cast<std::size_t>(start)] = true;
        Count degree_sum = 0;
        while (!stack.empty()) {
            const BIndex v = stack.back();
            stack.pop_back();
            comp.members.push_back(v);
            degree_sum += b.degree(v);
            for (BIndex w : b.neighbors(v)) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
        std::sort(comp.members.begin(), comp.members.end());
        comp.stats.size = static_cast<Count>(comp.members.size());
        comp.stats.edges = degree_sum / 2;
        comp.stats.avg_degree = Rational(2 * comp.stats.edges, comp.stats.size);
        comp.stats.dense = comp.stats.avg_degree >= Rational(6);
        comps.push_back(std::move(comp));
    }

    std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& c) {
        if (a.stats.size != c.stats.size) return a.stats.size > c.stats.size;
        return a.members.front() < c.members.front();
    });
    for (std::size_t i = 0; i < comps.size(); ++i)
        comps[i].stats.id = static_cast<int>(i);
    return comps;
}

DenseCensus dense_census(const std::vector<Component>& comps, Count size_bound) {
    DenseCensus census;
    for (const Component& c : comps) {
        census.size_histogram[c.stats.size] += 1;
        if (!c.stats.dense) continue;
        census.dense_count += 1;
        census.dense_size_sum += c.stats.size;
        if (c.stats.size < size_bound) census.dense_small_count += 1;
    }
    return census;
}

AvgDegreeBound avg_degree_bound(const LinearTripleSystem& h, const BowtieGraph& b) {
    const Rational d = h.linear_density();
    const Rational denom = d * Rational(h.n() - 1) - Rational(1);
    if (!(denom > Rational(0)))
        fail(errc::degenerate_density, "d(n-1) <= 1: average-degree bound undefined");
    AvgDegreeBound out;
    out.actual = b.order() > 0 ? Rational(2 * b.size(), b.order()) : Rational(0);
    out.bound = Rational(16) - Rational(8 * static_cast<std::int64_t>(h.n())) / denom;
    return out;
}

SizeLowerBound size_lower_bound(const LinearTripleSystem& h, const BowtieGraph& b) {
    const Rational d = h.linear_density();
    SizeLowerBound out;
    out.actual = b.order();
    const std::int64_t n = h.n();
    out.bound = d * d * Rational(n * n * n, 16);
    // n >= 12/d  <=>  n d >= 12
    out.applicable = Rational(n) * d >= Rational(12);
    for (VertexId v = 0; v < h.n(); ++v) {
        const Count deg = h.degree(v);
        out.pair_count += deg * (deg - 1) / 2;
    }
    return out;
}

std::string dump_edges(const BowtieGraph& b) {
    std::ostringstream out;
    out << b.order() << ' ' << b.size() << '\n';
    for (BIndex i = 0; i < static_cast<BIndex>(b.order()); ++i)
        for (BIndex j : b.neighbors(i)) {
            if (j <= i) continue;
            const BowtiePair& p = b.vert(i);
            const BowtiePair& q = b.vert(j);
            out << p.lo << ',' << p.hi << ' ' << q.lo << ',' << q.hi << '\n';
        }
    return out.str();
}

}  // namespace l3g
