#include "l3g/graph_census.hpp"

#include <algorithm>

namespace l3g {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<VertexId, VertexId>> edge_list)
    : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) fail(errc::bad_argument, "negative vertex count");
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(errc::vertex_out_of_range, "edge endpoint out of range");
        if (u == v) fail(errc::bad_argument, "loop edge");
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            fail(errc::bad_argument, "multi-edge");
        e_ += static_cast<Count>(list.size());
    }
    e_ /= 2;
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

SimpleGraph underlying_graph(const LinearTripleSystem& h) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(static_cast<std::size_t>(h.m()) * 3);
    for (const Triple& t : h.edges()) {
        edges.emplace_back(t.a(), t.b());
        edges.emplace_back(t.a(), t.c());
        edges.emplace_back(t.b(), t.c());
    }
    SimpleGraph u(h.n(), std::move(edges));
    internal_check(u.e() == 3 * static_cast<Count>(h.m()),
                   "underlying graph edge count != 3 e(H)");
    return u;
}

Count count_triangles(const SimpleGraph& g) {
    // For each edge (u,v) with u < v, count common neighbors w > v; sorted
    // lists make the intersection a linear merge.
    Count total = 0;
    for (VertexId u = 0; u < g.n(); ++u) {
        const auto& nu = g.neighbors(u);
        for (VertexId v : nu) {
            if (v <= u) continue;
            const auto& nv = g.neighbors(v);
            auto iu = std::lower_bound(nu.begin(), nu.end(), v + 1);
            auto iv = std::lower_bound(nv.begin(), nv.end(), v + 1);
            while (iu != nu.end() && iv != nv.end()) {
                if (*iu < *iv) {
                    ++iu;
                } else if (*iv < *iu) {
                    ++iv;
                } else {
                    ++total;
                    ++iu;
                    ++iv;
                }
            }
        }
    }
    return total;
}

Count count_cherries(const SimpleGraph& g) {
    Count total = 0;
    for (VertexId v = 0; v < g.n(); ++v) {
        const Count d = g.degree(v);
        total += d * (d - 1) / 2;
    }
    return total;
}

TriadCensus triad_census(const SimpleGraph& g) {
    const Count n = g.n();
    TriadCensus c;
    c.p3 = count_triangles(g);
    c.cherries = count_cherries(g);
    c.p2 = c.cherries - 3 * c.p3;
    c.p1 = g.e() * (n - 2) - 3 * c.p3 - 2 * c.p2;
    c.p0 = n * (n - 1) * (n - 2) / 6 - c.p1 - c.p2 - c.p3;
    internal_check(c.p0 >= 0 && c.p1 >= 0 && c.p2 >= 0, "negative triad count");
    return c;
}

TriadCensus triad_census_brute(const SimpleGraph& g) {
    TriadCensus c;
    for (VertexId a = 0; a < g.n(); ++a)
        for (VertexId b = a + 1; b < g.n(); ++b)
            for (VertexId v = b + 1; v < g.n(); ++v) {
                const int k = (g.has_edge(a, b) ? 1 : 0) + (g.has_edge(a, v) ? 1 : 0) +
                              (g.has_edge(b, v) ? 1 : 0);
                switch (k) {
                    case 0: ++c.p0; break;
                    case 1: ++c.p1; break;
                    case 2: ++c.p2; break;
                    default: ++c.p3; break;
                }
            }
    c.cherries = 3 * c.p3 + c.p2;
    return c;
}

Count goodman_slack(const SimpleGraph& g) {
    return 3 * count_triangles(g) - 2 * count_cherries(g) +
           g.e() * (static_cast<Count>(g.n()) - 2);
}

double jensen_cherry_lower_bound(const LinearTripleSystem& h) {
    if (h.n() < 2) fail(errc::degenerate_system, "bound needs n >= 2");
    const double n = static_cast<double>(h.n());
    const double x = 6.0 * static_cast<double>(h.m()) / n;
    return n * x * (x - 1.0) / 2.0;
}

std::pair<Count, Count> jensen_cherry_bound_exact(const LinearTripleSystem& h,
                                                  const SimpleGraph& u) {
    // n * x(x-1)/2 with x = 6m/n reduces to 3m(6m - n)/n; compare both
    // sides multiplied by n.
    const Count n = h.n();
    const Count m = h.m();
    return {count_cherries(u) * n, 3 * m * (6 * m - n)};
}

}  // namespace l3g
