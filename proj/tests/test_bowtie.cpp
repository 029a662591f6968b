#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "brute.hpp"
#include "l3g/bowtie.hpp"
#include "l3g/graph_census.hpp"
#include "l3g/triple_system.hpp"

using l3g::BIndex;
using l3g::BowtieGraph;
using l3g::Count;
using l3g::LinearTripleSystem;
using l3g::Rational;
using l3g::SimpleGraph;

namespace {

std::vector<LinearTripleSystem> identity_corpus() {
    std::vector<LinearTripleSystem> out;
    for (int n : {3, 7, 9, 13, 15, 19, 21}) out.push_back(l3g::generate_steiner(n));
    for (int n : {8, 11, 14, 17, 20})
        for (const Rational& d : {Rational(3, 10), Rational(3, 5)})
            out.push_back(l3g::generate_random_linear(n, d, n).system);
    for (int seed : {1, 2})
        out.push_back(l3g::dilute(l3g::generate_steiner(19), Rational(1, 2), seed));
    out.push_back(l3g::parse("6 2\n0 1 2\n3 4 5\n"));
    out.push_back(l3g::parse("5 2\n0 1 2\n0 3 4\n"));
    out.push_back(l3g::parse("4 0\n"));
    return out;
}

}  // namespace

TEST_CASE("fano bow-tie graph, every number pinned") {
    const LinearTripleSystem h = l3g::generate_steiner(7);
    const BowtieGraph b = l3g::build_bowtie(h);
    CHECK(b.order() == 21);
    CHECK(b.size() == 84);
    CHECK(b.max_degree() == 8);
    CHECK(l3g::check_degree_bound(b) == 8);
    for (BIndex i = 0; i < b.order(); ++i) CHECK(b.degree(i) == 8);

    const auto comps = l3g::components(b);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].stats.size == 21);
    CHECK(comps[0].stats.edges == 84);
    CHECK(comps[0].stats.avg_degree == Rational(8));
    CHECK(comps[0].stats.dense);

    const auto adb = l3g::avg_degree_bound(h, b);
    CHECK(adb.actual == Rational(8));
    CHECK(adb.bound == Rational(24, 5));  // 16 - 56/5

    const auto slb = l3g::size_lower_bound(h, b);
    CHECK(slb.actual == 21);
    CHECK(slb.pair_count == 21);
    CHECK_FALSE(slb.applicable);  // n = 7 < 12/d = 12
}

TEST_CASE("sts(9) and sts(13) bow-tie numbers") {
    {
        const LinearTripleSystem h = l3g::generate_steiner(9);
        const BowtieGraph b = l3g::build_bowtie(h);
        CHECK(b.order() == 54);
        CHECK(b.size() == 216);
        CHECK(Rational(2 * b.size(), b.order()) == Rational(8));
    }
    {
        const LinearTripleSystem h = l3g::generate_steiner(13);
        const BowtieGraph b = l3g::build_bowtie(h);
        CHECK(b.order() == 195);
        CHECK(b.size() == 780);
        const auto slb = l3g::size_lower_bound(h, b);
        CHECK(slb.applicable);  // 13 >= 12
        CHECK(Rational(slb.actual) >= slb.bound);  // 195 >= 2197/16
    }
}

TEST_CASE("vertices and edges match the definitional brute force") {
    for (const LinearTripleSystem& h : identity_corpus()) {
        if (h.m() > 40) continue;  // keep the quadratic oracle cheap
        CAPTURE(h.n());
        CAPTURE(h.m());
        const BowtieGraph b = l3g::build_bowtie(h);
        const brute::Bowtie ref = brute::build_bowtie(h);

        REQUIRE(b.order() == static_cast<Count>(ref.verts.size()));
        for (std::size_t i = 0; i < ref.verts.size(); ++i) {
            CHECK(b.vert(static_cast<BIndex>(i)).lo == ref.verts[i].first);
            CHECK(b.vert(static_cast<BIndex>(i)).hi == ref.verts[i].second);
        }

        std::set<std::pair<std::size_t, std::size_t>> got;
        for (BIndex i = 0; i < b.order(); ++i)
            for (BIndex j : b.neighbors(i))
                if (i < j) got.insert({static_cast<std::size_t>(i),
                                       static_cast<std::size_t>(j)});
        CHECK(got == ref.edges);
        CHECK(b.size() == static_cast<Count>(ref.edges.size()));

        const auto deg = brute::bowtie_degrees(ref);
        for (BIndex i = 0; i < b.order(); ++i)
            CHECK(b.degree(i) == deg[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("bow-tie identities hold across the corpus") {
    for (const LinearTripleSystem& h : identity_corpus()) {
        CAPTURE(h.n());
        CAPTURE(h.m());
        const SimpleGraph u = l3g::underlying_graph(h);
        const BowtieGraph b = l3g::build_bowtie(h);

        const auto [e_lhs, e_rhs] = l3g::edge_identity(h, b, u);
        CHECK(e_lhs == e_rhs);
        CHECK(e_lhs == b.size());

        const auto [c_lhs, c_rhs] = l3g::cherry_pair_identity(h, b, u);
        CHECK(c_lhs == c_rhs);
        CHECK(c_lhs == 4 * b.order() + 3 * static_cast<Count>(h.m()));

        const auto slb = l3g::size_lower_bound(h, b);
        CHECK(slb.actual == b.order());
        CHECK(slb.actual == slb.pair_count);
        if (slb.applicable) CHECK(Rational(slb.actual) >= slb.bound);

        if (b.order() > 0) CHECK(l3g::check_degree_bound(b) <= 8);
    }
}

TEST_CASE("find_pair inverts the vertex list") {
    const LinearTripleSystem h = l3g::generate_steiner(9);
    const BowtieGraph b = l3g::build_bowtie(h);
    for (BIndex i = 0; i < b.order(); ++i) {
        const auto& p = b.vert(i);
        CHECK(b.find_pair(p.lo, p.hi) == i);
        CHECK(h.edge(p.lo).shared_count(h.edge(p.hi)) == 1);
        CHECK(h.edge(p.lo).contains(p.shared));
        CHECK(h.edge(p.hi).contains(p.shared));
    }
    // disjoint triples of sts(9) exist; their pair is absent
    bool checked_disjoint = false;
    for (l3g::EdgeId i = 0; i < h.m() && !checked_disjoint; ++i)
        for (l3g::EdgeId j = i + 1; j < h.m() && !checked_disjoint; ++j)
            if (h.edge(i).shared_count(h.edge(j)) == 0) {
                CHECK(b.find_pair(i, j) == -1);
                checked_disjoint = true;
            }
    CHECK(checked_disjoint);
}

TEST_CASE("two disjoint fano copies give two dense components") {
    const LinearTripleSystem fano = l3g::generate_steiner(7);
    std::string text = "14 14\n";
    for (int copy = 0; copy < 2; ++copy)
        for (const l3g::Triple& t : fano.edges()) {
            text += std::to_string(t.a() + 7 * copy) + " " +
                    std::to_string(t.b() + 7 * copy) + " " +
                    std::to_string(t.c() + 7 * copy) + "\n";
        }
    const LinearTripleSystem h = l3g::parse(text);
    const BowtieGraph b = l3g::build_bowtie(h);
    CHECK(b.order() == 42);
    CHECK(b.size() == 168);

    const auto comps = l3g::components(b);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].stats.size == 21);
    CHECK(comps[1].stats.size == 21);
    CHECK(comps[0].stats.dense);
    CHECK(comps[1].stats.dense);
    CHECK(comps[0].stats.id == 0);
    CHECK(comps[1].stats.id == 1);
    // equal sizes tie-break by smallest member
    CHECK(comps[0].members.front() < comps[1].members.front());
    for (const auto& c : comps) {
        CHECK(std::is_sorted(c.members.begin(), c.members.end()));
        CHECK(static_cast<Count>(c.members.size()) == c.stats.size);
    }

    const auto dc = l3g::dense_census(comps, 10);
    CHECK(dc.dense_count == 2);
    CHECK(dc.dense_small_count == 0);
    CHECK(dc.dense_size_sum == 42);
    CHECK(dc.size_histogram.at(21) == 2);
}

TEST_CASE("degenerate density throws on the avg-degree bound") {
    const LinearTripleSystem h = l3g::parse("7 1\n0 1 2\n");  // d(n-1) = 6/7 < 1
    const BowtieGraph b = l3g::build_bowtie(h);
    CHECK_THROWS_AS(l3g::avg_degree_bound(h, b), l3g::Error);
}

TEST_CASE("empty bow-tie graph behaves") {
    const LinearTripleSystem h = l3g::parse("3 1\n0 1 2\n");
    const BowtieGraph b = l3g::build_bowtie(h);
    CHECK(b.order() == 0);
    CHECK(b.size() == 0);
    CHECK(l3g::components(b).empty());
    const auto dc = l3g::dense_census({}, 5);
    CHECK(dc.dense_count == 0);
    CHECK(dc.dense_size_sum == 0);
}

TEST_CASE("edge dump has the documented shape") {
    const BowtieGraph b = l3g::build_bowtie(l3g::generate_steiner(7));
    const std::string dump = l3g::dump_edges(b);
    CHECK(dump.substr(0, 6) == "21 84\n");
    CHECK(std::count(dump.begin(), dump.end(), '\n') == 85);
}
