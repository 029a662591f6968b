#include "l3g/analyze.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

namespace l3g {

namespace {

std::string fmt_double(double v) {
    if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - since)
        .count();
}

}  // namespace

bool AnalysisReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

AnalysisReport analyze(const LinearTripleSystem& h, const AnalyzeOptions& opts) {
    if (opts.k < 3) fail(errc::bad_k, "analysis needs k >= 3");
    if (opts.component_bound < 0) fail(errc::bad_argument, "negative component bound");

    AnalysisReport r;
    r.k = opts.k;
    r.component_bound = opts.component_bound > 0
                            ? opts.component_bound
                            : 10 * (static_cast<Count>(opts.k) + 3);
    r.budget_nodes = opts.budget.max_nodes;
    r.budget_millis = opts.budget.max_millis;
    r.timings_enabled = opts.timings;

    const auto t0 = std::chrono::steady_clock::now();
    auto phase_start = t0;
    auto mark_phase = [&](const char* name) {
        r.timings_ms.emplace_back(name, elapsed_ms(phase_start));
        phase_start = std::chrono::steady_clock::now();
    };

    auto add = [&](std::string name, std::string lhs, std::string rhs, bool pass,
                   bool hard, std::string note = "") {
        internal_check(!hard || pass, "hard check " + name + " failed: lhs=" + lhs +
                                          ", rhs=" + rhs +
                                          (note.empty() ? "" : ", " + note));
        r.checks.push_back({std::move(name), std::move(lhs), std::move(rhs), pass, hard,
                            std::move(note)});
    };

    const Count n = h.n();
    const Count m = h.m();
    r.n = h.n();
    r.m = h.m();
    r.linear_density = h.linear_density();
    const Rational d = r.linear_density;

    const SimpleGraph u = underlying_graph(h);
    r.census = triad_census(u);

    add("underlying_edge_count", std::to_string(u.e()), std::to_string(3 * m),
        u.e() == 3 * m, true);
    add("census_total", std::to_string(r.census.total()),
        std::to_string(n * (n - 1) * (n - 2) / 6),
        r.census.total() == n * (n - 1) * (n - 2) / 6, true);
    const Count slack = goodman_slack(u);
    add("goodman_slack_nonneg", std::to_string(slack), "0", slack >= 0, true,
        "slack equals p1 = " + std::to_string(r.census.p1));
    const auto [jl, jr] = jensen_cherry_bound_exact(h, u);
    add("jensen_cherries", std::to_string(jl), std::to_string(jr), jl >= jr, true,
        "n * cherries(U) >= 3m(6m - n)");
    mark_phase("census");

    const BowtieGraph b = build_bowtie(h);
    r.b_order = b.order();
    r.b_size = b.size();
    r.b_max_degree = b.order() > 0 ? b.max_degree() : 0;
    if (r.b_order > 0) {
        r.b_avg_defined = true;
        r.b_avg_degree = Rational(2 * r.b_size, r.b_order);
    }

    add("bowtie_max_degree", std::to_string(r.b_max_degree), "8", r.b_max_degree <= 8,
        true);
    const auto [ei_l, ei_r] = edge_identity(h, b, u);
    add("bowtie_edge_identity", std::to_string(ei_l), std::to_string(ei_r), ei_l == ei_r,
        true, "e(B) = 3 triangles(U) - 3m");
    const auto [ci_l, ci_r] = cherry_pair_identity(h, b, u);
    add("bowtie_cherry_identity", std::to_string(ci_l), std::to_string(ci_r),
        ci_l == ci_r, true, "4|B| + 3m = cherries(U)");
    const SizeLowerBound slb = size_lower_bound(h, b);
    add("bowtie_order_pairs", std::to_string(slb.actual), std::to_string(slb.pair_count),
        slb.actual == slb.pair_count, true, "|B| = sum of C(deg(v), 2)");
    if (slb.applicable)
        add("bowtie_size_lower", std::to_string(slb.actual), slb.bound.str(),
            Rational(slb.actual) >= slb.bound, true, "|B| >= d^2 n^3 / 16 for n >= 12/d");

    if (r.b_order > 0 && d * Rational(n - 1) > Rational(1)) {
        const AvgDegreeBound adb = avg_degree_bound(h, b);
        add("bowtie_avg_degree_lower", adb.actual.str(), adb.bound.str(),
            adb.actual >= adb.bound, true, "d^avg(B) >= 16 - 8n/(d(n-1) - 1)");
    }

    const Rational eps = d - Rational(4, 5);
    if (eps > Rational(0)) {
        try {
            r.thresholds = compute_thresholds(eps, opts.k);
            r.has_thresholds = true;
        } catch (const Error&) {
            r.has_thresholds = false;
        }
    }

    if (r.b_order > 0 && eps >= Rational(0)) {
        const Rational target = Rational(6) + eps;
        const bool hard6 = r.has_thresholds && r.n >= r.thresholds.n3;
        add("avg_degree_six_eps", r.b_avg_degree.str(), target.str(),
            r.b_avg_degree >= target, hard6,
            "slack d^avg - 6 = " + (r.b_avg_degree - Rational(6)).str() +
                (hard6 ? ", n >= n3 so the bound is guaranteed"
                       : ", advisory below n3"));
    }
    mark_phase("bowtie");

    std::vector<Component> comps;
    if (r.b_order > 0) {
        comps = components(b);
        const DenseCensus dc = dense_census(comps, r.component_bound);
        r.comps.count = static_cast<Count>(comps.size());
        r.comps.largest_size = comps.front().stats.size;
        r.comps.dense_count = dc.dense_count;
        r.comps.dense_size_sum = dc.dense_size_sum;
        const Count up_lhs = 2 * r.b_size;
        const Count up_rhs = 6 * r.b_order + 2 * dc.dense_size_sum;
        r.comps.up_avg_slack = up_rhs - up_lhs;
        add("up_avg_split", std::to_string(up_lhs), std::to_string(up_rhs),
            up_lhs <= up_rhs, true, "2e(B) <= 6|B| + 2 sum of dense |C_i|");
    }
    mark_phase("components");

    std::vector<const Component*> targets;
    if (r.b_size == 0) {
        r.branch = "no_seeds";
    } else if (comps.front().stats.size >= r.component_bound) {
        r.branch = "large_component";
        targets.push_back(&comps.front());
    } else {
        r.branch = "dense_components";
        const Rational eps_pos = eps > Rational(0) ? eps : Rational(0);
        if (eps >= Rational(0)) {
            const Rational mass_rhs = eps_pos * Rational(r.b_order) / Rational(2);
            add("dense_mass", std::to_string(r.comps.dense_size_sum), mass_rhs.str(),
                Rational(r.comps.dense_size_sum) >= mass_rhs, false,
                "sum of dense |C_i| >= eps |B| / 2");
        }
        if (eps > Rational(0)) {
            const double log3 = std::log(3.0);
            const double lhs = r.comps.dense_count > 0
                                   ? std::log(static_cast<double>(r.comps.dense_count)) / log3
                                   : -std::numeric_limits<double>::infinity();
            const double rhs =
                std::log(eps.to_double() * static_cast<double>(r.b_order)) / log3 -
                (10.0 * opts.k * opts.k + 1.0);
            add("dense_count_log3", fmt_double(lhs), fmt_double(rhs), lhs >= rhs, false,
                "log3 |I| >= log3(eps |B|) - (10k^2 + 1)");
        }
        for (const Component& c : comps)
            if (c.stats.dense) targets.push_back(&c);
    }

    if (opts.run_search && !targets.empty()) {
        SearchBudget remaining = opts.budget;
        const auto search_start = std::chrono::steady_clock::now();
        for (const Component* c : targets) {
            r.search.attempted = true;
            const ComponentSearchResult res =
                component_guided_search(h, b, *c, opts.k, remaining);
            r.search.seeds_tried += res.seeds_tried;
            r.search.best_k = std::max(r.search.best_k, res.best.k());
            if (res.success) {
                r.has_witness = true;
                r.witness = res.best;
                break;
            }
            if (res.budget_exhausted) {
                r.search.budget_exhausted = true;
                break;
            }
            remaining.max_nodes -= res.nodes_used;
            remaining.max_millis = opts.budget.max_millis - elapsed_ms(search_start);
            if (remaining.max_nodes <= 0 || remaining.max_millis <= 0) {
                r.search.budget_exhausted = true;
                break;
            }
        }
    }

    if (r.has_witness) {
        const bool ok =
            is_config(h, r.witness.edge_indices, opts.k + 3, opts.k);
        add("witness_verified", "span " + std::to_string(r.witness.span_size()),
            "<= " + std::to_string(opts.k + 3), ok, true,
            "is_config cross-check of the reported witness");
    }
    mark_phase("search");
    r.timings_ms.emplace_back("total", elapsed_ms(t0));

    return r;
}

std::string report_to_json(const AnalysisReport& r) {
    using nlohmann::json;
    json j;
    j["schema"] = 1;
    j["instance"] = {{"n", r.n}, {"m", r.m}, {"linear_density", r.linear_density.str()}};
    j["census"] = {{"p0", r.census.p0},       {"p1", r.census.p1},
                   {"p2", r.census.p2},       {"p3", r.census.p3},
                   {"triangles", r.census.p3}, {"cherries", r.census.cherries}};
    j["bowtie"] = {{"order", r.b_order},
                   {"size", r.b_size},
                   {"max_degree", r.b_max_degree},
                   {"avg_degree",
                    r.b_avg_defined ? json(r.b_avg_degree.str()) : json(nullptr)}};

    json checks = json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"pass", c.pass},
                          {"hard", c.hard},
                          {"note", c.note}});
    j["checks"] = std::move(checks);

    j["components"] = {{"count", r.comps.count},
                       {"largest", r.comps.largest_size},
                       {"dense_count", r.comps.dense_count},
                       {"dense_size_sum", r.comps.dense_size_sum},
                       {"up_avg_slack", r.comps.up_avg_slack}};
    j["branch"] = r.branch;
    j["parameters"] = {{"k", r.k},
                       {"component_bound", r.component_bound},
                       {"budget_nodes", r.budget_nodes},
                       {"budget_millis", r.budget_millis}};
    j["search"] = {{"attempted", r.search.attempted},
                   {"seeds_tried", r.search.seeds_tried},
                   {"budget_exhausted", r.search.budget_exhausted},
                   {"best_k", r.search.best_k}};

    if (r.has_witness) {
        j["witness"] = {{"k", r.witness.k()},
                        {"span_size", r.witness.span_size()},
                        {"edges", r.witness.edge_indices},
                        {"span", r.witness.span}};
    } else {
        j["witness"] = nullptr;
    }

    if (r.has_thresholds) {
        const Thresholds& t = r.thresholds;
        j["thresholds"] = {{"eps", t.eps.str()},
                           {"delta", t.delta.str()},
                           {"n1", t.n1},
                           {"n2_known", t.n2_known},
                           {"n3", t.n3},
                           {"beta_log3", t.beta_log3},
                           {"component_bound_exponent", t.component_bound_exponent},
                           {"n0_practical", t.n0_practical}};
    } else {
        j["thresholds"] = nullptr;
    }

    if (r.timings_enabled) {
        json t = json::object();
        for (const auto& [name, ms] : r.timings_ms) t[name] = ms;
        j["timings_ms"] = std::move(t);
    }

    return j.dump(2) + "\n";
}

}  // namespace l3g
