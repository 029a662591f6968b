#include <doctest.h>

#include <algorithm>
#include <vector>

#include "brute.hpp"
#include "l3g/config_search.hpp"
#include "l3g/triple_system.hpp"

using l3g::BIndex;
using l3g::BowtieGraph;
using l3g::Configuration;
using l3g::EdgeId;
using l3g::LinearTripleSystem;
using l3g::Rational;
using l3g::SearchBudget;
using l3g::SearchOutcome;

namespace {

SearchBudget roomy() { return {1'000'000'000, 300'000}; }

}  // namespace

TEST_CASE("make_configuration computes spans and rejects bad indices") {
    const LinearTripleSystem h = l3g::generate_steiner(7);
    const Configuration c = l3g::make_configuration(h, {1, 0, 1});
    CHECK(c.k() == 2);  // duplicates collapse
    CHECK(c.edge_indices == std::vector<EdgeId>{0, 1});
    CHECK(c.span_size() == brute::span_size(h, c.edge_indices));
    CHECK(std::is_sorted(c.span.begin(), c.span.end()));

    CHECK_THROWS_AS(l3g::make_configuration(h, {7}), l3g::Error);
    CHECK_THROWS_AS(l3g::make_configuration(h, {-1}), l3g::Error);
    CHECK_THROWS_AS(l3g::make_configuration(h, {}), l3g::Error);
}

TEST_CASE("is_config matches the brute span computation") {
    const LinearTripleSystem h = l3g::generate_random_linear(12, Rational(1, 2), 9).system;
    REQUIRE(h.m() >= 4);
    for (EdgeId a = 0; a < h.m(); ++a)
        for (EdgeId b = a + 1; b < h.m(); ++b)
            for (EdgeId c = b + 1; c < h.m(); ++c) {
                const std::vector<EdgeId> edges{a, b, c};
                const int span = brute::span_size(h, edges);
                for (int s = 5; s <= 9; ++s)
                    CHECK(l3g::is_config(h, edges, s, 3) == (span <= s));
                CHECK_FALSE(l3g::is_config(h, edges, 9, 4));  // wrong k
            }
    CHECK_FALSE(l3g::is_config(h, {0, 0, 1}, 9, 3));  // duplicates collapse to k=2
}

TEST_CASE("bow-tie edge seeds are (6,3)-configurations") {
    const LinearTripleSystem h = l3g::generate_steiner(9);
    const BowtieGraph b = l3g::build_bowtie(h);
    int seeds_checked = 0;
    for (BIndex i = 0; i < b.order(); ++i)
        for (BIndex j : b.neighbors(i)) {
            if (j <= i) continue;
            const Configuration seed = l3g::seed_from_bowtie_edge(h, b, i, j);
            CHECK(seed.k() == 3);
            CHECK(seed.span_size() == 6);
            CHECK(l3g::is_config(h, seed.edge_indices, 6, 3));
            ++seeds_checked;
        }
    CHECK(seeds_checked == b.size());

    // a non-adjacent pair is rejected
    bool rejected = false;
    for (BIndex i = 0; i < b.order() && !rejected; ++i)
        for (BIndex j = i + 1; j < b.order() && !rejected; ++j) {
            const auto nb = b.neighbors(i);
            if (std::binary_search(nb.begin(), nb.end(), j)) continue;
            CHECK_THROWS_AS(l3g::seed_from_bowtie_edge(h, b, i, j), l3g::Error);
            rejected = true;
        }
    CHECK(rejected);
}

TEST_CASE("greedy extension keeps the span invariant and reaches k") {
    const LinearTripleSystem h = l3g::generate_steiner(13);
    const BowtieGraph b = l3g::build_bowtie(h);
    REQUIRE(b.size() > 0);
    const BIndex j0 = b.neighbors(0).front();
    const Configuration seed = l3g::seed_from_bowtie_edge(h, b, 0, j0);

    for (int k = 3; k <= 10; ++k) {
        CAPTURE(k);
        const l3g::GreedyResult g = l3g::greedy_extend(h, seed, k);
        CHECK(g.success);
        CHECK(g.reached.k() == k);
        CHECK(g.reached.span_size() <= k + 3);
        CHECK(l3g::is_config(h, g.reached.edge_indices, k + 3, k));
        CHECK(g.steps == k - 3);
        CHECK(g.reached.span_size() == brute::span_size(h, g.reached.edge_indices));
    }

    CHECK_THROWS_AS(l3g::greedy_extend(h, seed, 2), l3g::Error);
}

TEST_CASE("greedy is deterministic") {
    const LinearTripleSystem h = l3g::generate_steiner(15);
    const BowtieGraph b = l3g::build_bowtie(h);
    const Configuration seed = l3g::seed_from_bowtie_edge(h, b, 0, b.neighbors(0).front());
    const auto g1 = l3g::greedy_extend(h, seed, 8);
    const auto g2 = l3g::greedy_extend(h, seed, 8);
    CHECK(g1.reached.edge_indices == g2.reached.edge_indices);
}

TEST_CASE("exhaustive search agrees with subset enumeration on tiny systems") {
    const std::vector<std::string> texts = {
        "7 7\n",  // replaced below by fano
        "6 2\n0 1 2\n3 4 5\n",
        "5 2\n0 1 2\n0 3 4\n",
        "9 4\n0 1 2\n0 3 4\n1 3 5\n6 7 8\n",
    };
    std::vector<LinearTripleSystem> systems;
    systems.push_back(l3g::generate_steiner(7));
    for (std::size_t i = 1; i < texts.size(); ++i) systems.push_back(l3g::parse(texts[i]));
    systems.push_back(l3g::generate_random_linear(10, Rational(2, 5), 3).system);

    for (const LinearTripleSystem& h : systems) {
        CAPTURE(h.n());
        CAPTURE(h.m());
        for (int k = 1; k <= std::min(4, h.m()); ++k)
            for (int s = 3; s <= 3 * k; ++s) {
                const auto res = l3g::exhaustive_search(h, k, s, roomy());
                REQUIRE(res.outcome != SearchOutcome::indeterminate);
                const bool expected = brute::exists_config(h, k, s);
                CHECK((res.outcome == SearchOutcome::found) == expected);
                if (res.outcome == SearchOutcome::found)
                    CHECK(l3g::is_config(h, res.witness.edge_indices, s, k));
            }
    }
}

TEST_CASE("exhaustive finds the lexicographically first witness") {
    const LinearTripleSystem h = l3g::generate_steiner(7);
    const auto res = l3g::exhaustive_search(h, 3, 6, roomy());
    REQUIRE(res.outcome == SearchOutcome::found);
    // include-before-exclude over ascending indices: no witness precedes it
    const auto& w = res.witness.edge_indices;
    std::vector<EdgeId> probe;
    bool earlier_exists = false;
    for (EdgeId a = 0; a <= w[0] && !earlier_exists; ++a)
        for (EdgeId b = a + 1; b < h.m() && !earlier_exists; ++b)
            for (EdgeId c = b + 1; c < h.m() && !earlier_exists; ++c) {
                probe = {a, b, c};
                if (probe >= w) continue;
                if (l3g::is_config(h, probe, 6, 3)) earlier_exists = true;
            }
    CHECK_FALSE(earlier_exists);
}

TEST_CASE("node budget yields indeterminate, not a wrong answer") {
    const LinearTripleSystem h = l3g::generate_steiner(13);
    const auto res = l3g::exhaustive_search(h, 6, 6, {50, 300'000});
    CHECK(res.outcome == SearchOutcome::indeterminate);
    CHECK(res.nodes >= 50);

    const auto full = l3g::exhaustive_search(h, 3, 6, roomy());
    CHECK(full.outcome == SearchOutcome::found);
    CHECK_THROWS_AS(l3g::exhaustive_search(h, 3, 6, {0, 1000}), l3g::Error);
}

TEST_CASE("component search finds witnesses and respects budgets") {
    const LinearTripleSystem h = l3g::generate_steiner(9);
    const BowtieGraph b = l3g::build_bowtie(h);
    const auto comps = l3g::components(b);
    REQUIRE(comps.size() == 1);

    const auto res = l3g::component_guided_search(h, b, comps[0], 5, roomy());
    CHECK(res.success);
    CHECK(res.best.k() == 5);
    CHECK(l3g::is_config(h, res.best.edge_indices, 8, 5));
    CHECK(res.seeds_tried >= 1);
    CHECK_FALSE(res.budget_exhausted);

    // k larger than m can never succeed; a small budget must trip
    const auto hard = l3g::component_guided_search(h, b, comps[0], 40, {5, 300'000});
    CHECK_FALSE(hard.success);
    CHECK(hard.budget_exhausted);
    CHECK(hard.nodes_used <= 5 + 40);
}

TEST_CASE("greedy success implies exhaustive success") {
    for (int n : {9, 13, 15}) {
        const LinearTripleSystem h = l3g::generate_steiner(n);
        const BowtieGraph b = l3g::build_bowtie(h);
        const auto comps = l3g::components(b);
        REQUIRE(!comps.empty());
        for (int k : {4, 5}) {
            CAPTURE(n);
            CAPTURE(k);
            const auto greedy = l3g::component_guided_search(h, b, comps[0], k, roomy());
            if (!greedy.success) continue;
            const auto ex = l3g::exhaustive_search(h, k, k + 3, roomy());
            CHECK(ex.outcome == SearchOutcome::found);
        }
    }
}
