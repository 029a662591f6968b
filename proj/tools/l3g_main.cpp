#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "l3g/analyze.hpp"
#include "l3g/bowtie.hpp"
#include "l3g/config_search.hpp"
#include "l3g/sweep.hpp"
#include "l3g/thresholds.hpp"
#include "l3g/triple_system.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoWitness = 2;
constexpr int kExitInput = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) l3g::fail(l3g::errc::io_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) l3g::fail(l3g::errc::io_error, "read failed on " + path);
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) l3g::fail(l3g::errc::io_error, "cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) l3g::fail(l3g::errc::io_error, "write failed on " + path);
}

std::vector<l3g::Rational> parse_grid(const std::string& text) {
    std::vector<l3g::Rational> grid;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) grid.push_back(l3g::Rational::parse(item));
    if (grid.empty()) l3g::fail(l3g::errc::bad_argument, "empty density grid");
    return grid;
}

nlohmann::json witness_json(const l3g::Configuration& c) {
    return {{"k", c.k()},
            {"span_size", c.span_size()},
            {"edges", c.edge_indices},
            {"span", c.span}};
}

struct CommonFlags {
    std::uint64_t seed = 0;
    l3g::Count budget_nodes = l3g::SearchBudget{}.max_nodes;
    l3g::Count budget_ms = l3g::SearchBudget{}.max_millis;
    l3g::Count component_bound = 0;
    std::string out;

    l3g::SearchBudget budget() const { return {budget_nodes, budget_ms}; }
};

void add_common(CLI::App* sub, CommonFlags& f, bool with_bound = true) {
    sub->add_option("--seed", f.seed, "RNG seed");
    sub->add_option("--budget-nodes", f.budget_nodes, "search node budget");
    sub->add_option("--budget-ms", f.budget_ms, "search time budget, milliseconds");
    if (with_bound)
        sub->add_option("--component-bound", f.component_bound,
                        "large-component cutoff (0: 10(k+3))");
    sub->add_option("--out", f.out, "output file (default: stdout)");
}

int run_gen(const std::string& kind, int n, const std::string& density,
            const CommonFlags& flags) {
    l3g::LinearTripleSystem h = [&] {
        if (kind == "steiner") return l3g::generate_steiner(n);
        return l3g::generate_random_linear(n, l3g::Rational::parse(density), flags.seed)
            .system;
    }();
    write_output(flags.out, l3g::serialize(h));
    return kExitOk;
}

int run_verify(const std::string& file) {
    const l3g::LinearTripleSystem h = l3g::parse(read_file(file));
    l3g::AnalyzeOptions opts;
    opts.run_search = false;
    const l3g::AnalysisReport rep = l3g::analyze(h, opts);
    std::size_t hard = 0;
    for (const auto& c : rep.checks)
        if (c.hard) ++hard;
    std::cout << "ok: " << file << ": n=" << rep.n << " m=" << rep.m
              << " d=" << rep.linear_density.str() << " |B|=" << rep.b_order
              << " e(B)=" << rep.b_size << " hard_checks=" << hard << "\n";
    return kExitOk;
}

int run_analyze(const std::string& file, int k, bool timings, const CommonFlags& flags) {
    const l3g::LinearTripleSystem h = l3g::parse(read_file(file));
    l3g::AnalyzeOptions opts;
    opts.k = k;
    opts.component_bound = flags.component_bound;
    opts.budget = flags.budget();
    opts.timings = timings;
    const l3g::AnalysisReport rep = l3g::analyze(h, opts);
    write_output(flags.out, l3g::report_to_json(rep));
    return rep.has_witness ? kExitOk : kExitNoWitness;
}

int run_search(const std::string& file, int k, int s, std::string method,
               const CommonFlags& flags) {
    const l3g::LinearTripleSystem h = l3g::parse(read_file(file));
    if (s <= 0) s = k + 3;
    if (k < 3 && method == "greedy") method = "exhaustive";

    nlohmann::json j;
    j["schema"] = 1;
    j["k"] = k;
    j["s"] = s;
    j["method"] = method;
    bool found = false;

    if (method == "exhaustive") {
        const l3g::ExhaustiveResult res = l3g::exhaustive_search(h, k, s, flags.budget());
        found = res.outcome == l3g::SearchOutcome::found;
        j["outcome"] = res.outcome == l3g::SearchOutcome::found         ? "found"
                       : res.outcome == l3g::SearchOutcome::indeterminate ? "indeterminate"
                                                                          : "not_found";
        j["nodes"] = res.nodes;
        j["witness"] = found ? witness_json(res.witness) : nlohmann::json(nullptr);
        if (found)
            l3g::internal_check(l3g::is_config(h, res.witness.edge_indices, s, k),
                                "exhaustive witness failed verification");
    } else {
        const l3g::BowtieGraph b = l3g::build_bowtie(h);
        l3g::SearchBudget remaining = flags.budget();
        l3g::Count seeds = 0;
        int best_k = 0;
        bool exhausted = false;
        l3g::Configuration witness;
        for (const l3g::Component& c : l3g::components(b)) {
            const l3g::ComponentSearchResult res =
                l3g::component_guided_search(h, b, c, k, remaining);
            seeds += res.seeds_tried;
            best_k = std::max(best_k, res.best.k());
            if (res.success) {
                found = true;
                witness = res.best;
                break;
            }
            if (res.budget_exhausted) {
                exhausted = true;
                break;
            }
            remaining.max_nodes -= res.nodes_used;
            if (remaining.max_nodes <= 0) {
                exhausted = true;
                break;
            }
        }
        if (found && !l3g::is_config(h, witness.edge_indices, s, k)) found = false;
        j["outcome"] = found ? "found" : exhausted ? "indeterminate" : "not_found";
        j["seeds_tried"] = seeds;
        j["best_k"] = best_k;
        j["witness"] = found ? witness_json(witness) : nlohmann::json(nullptr);
    }

    write_output(flags.out, j.dump(2) + "\n");
    return found ? kExitOk : kExitNoWitness;
}

int run_sweep(int n, int k, const std::string& grid, int trials, int threads,
              bool timings, const CommonFlags& flags) {
    l3g::SweepOptions opts;
    opts.n = n;
    opts.k = k;
    opts.grid = parse_grid(grid);
    opts.trials = trials;
    opts.seed = flags.seed;
    opts.budget = flags.budget();
    opts.timings = timings;
    opts.threads = threads;
    write_output(flags.out, l3g::sweep_to_csv(l3g::density_sweep(opts)));
    return kExitOk;
}

int run_thresholds(const std::string& eps, int k, const CommonFlags& flags) {
    const l3g::Thresholds t = l3g::compute_thresholds(l3g::Rational::parse(eps), k);
    nlohmann::json j = {{"schema", 1},
                        {"eps", t.eps.str()},
                        {"delta", t.delta.str()},
                        {"n1", t.n1},
                        {"n2_known", t.n2_known},
                        {"n3", t.n3},
                        {"beta_log3", t.beta_log3},
                        {"component_bound_exponent", t.component_bound_exponent},
                        {"n0_practical", t.n0_practical}};
    write_output(flags.out, j.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear 3-uniform hypergraph toolkit"};
    app.require_subcommand(1);

    CommonFlags gen_flags, verify_flags, analyze_flags, search_flags, sweep_flags,
        thresholds_flags;

    auto* gen = app.add_subcommand("gen", "generate an instance and write it as .l3g");
    std::string gen_kind;
    int gen_n = 0;
    std::string gen_density = "1/2";
    gen->add_option("kind", gen_kind, "steiner or random")
        ->required()
        ->check(CLI::IsMember({"steiner", "random"}));
    gen->add_option("n", gen_n, "number of vertices")->required();
    gen->add_option("--density", gen_density, "target density for random (rational)");
    add_common(gen, gen_flags, false);

    auto* verify = app.add_subcommand("verify", "load a .l3g file and run every check");
    std::string verify_file;
    verify->add_option("file", verify_file, ".l3g input")->required();

    auto* analyze = app.add_subcommand("analyze", "full pipeline, JSON report");
    std::string analyze_file;
    int analyze_k = 4;
    bool analyze_timings = false;
    analyze->add_option("file", analyze_file, ".l3g input")->required();
    analyze->add_option("--k", analyze_k, "configuration size k (k+3 vertices)");
    analyze->add_flag("--timings", analyze_timings, "include wall-clock timings");
    add_common(analyze, analyze_flags);

    auto* search = app.add_subcommand("search", "find a (s,k)-configuration");
    std::string search_file, search_method = "greedy";
    int search_k = 4, search_s = 0;
    search->add_option("file", search_file, ".l3g input")->required();
    search->add_option("--k", search_k, "number of edges")->required();
    search->add_option("--s", search_s, "max span (default k+3)");
    search->add_option("--method", search_method, "greedy or exhaustive")
        ->check(CLI::IsMember({"greedy", "exhaustive"}));
    add_common(search, search_flags, false);

    auto* sweep = app.add_subcommand("sweep", "density sweep, CSV output");
    int sweep_n = 13, sweep_k = 4, sweep_trials = 1, sweep_threads = 0;
    std::string sweep_grid;
    bool sweep_timings = false;
    sweep->add_option("--n", sweep_n, "STS order")->required();
    sweep->add_option("--k", sweep_k, "configuration size");
    sweep->add_option("--grid", sweep_grid, "comma-separated densities")->required();
    sweep->add_option("--trials", sweep_trials, "trials per density");
    sweep->add_option("--threads", sweep_threads, "worker threads (0: auto)");
    sweep->add_flag("--timings", sweep_timings, "measure elapsed_ms per row");
    add_common(sweep, sweep_flags, false);

    auto* thresholds = app.add_subcommand("thresholds", "compute thresholds, JSON");
    std::string th_eps;
    int th_k = 4;
    thresholds->add_option("--eps", th_eps, "density offset over 4/5 (rational)")
        ->required();
    thresholds->add_option("--k", th_k, "configuration size");
    add_common(thresholds, thresholds_flags, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*gen) return run_gen(gen_kind, gen_n, gen_density, gen_flags);
        if (*verify) return run_verify(verify_file);
        if (*analyze)
            return run_analyze(analyze_file, analyze_k, analyze_timings, analyze_flags);
        if (*search)
            return run_search(search_file, search_k, search_s, search_method,
                              search_flags);
        if (*sweep)
            return run_sweep(sweep_n, sweep_k, sweep_grid, sweep_trials, sweep_threads,
                             sweep_timings, sweep_flags);
        if (*thresholds) return run_thresholds(th_eps, th_k, thresholds_flags);
    } catch (const l3g::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.is_internal() ? kExitInternal : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
