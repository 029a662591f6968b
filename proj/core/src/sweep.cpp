#include "l3g/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <thread>

namespace l3g {

namespace {

std::string fmt_csv_number(const Rational& r) {
    if (r.is_integer()) return std::to_string(r.num());
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", r.to_double());
    return buf;
}

}  // namespace

std::vector<SweepRow> density_sweep(const SweepOptions& opts) {
    if (opts.grid.empty()) fail(errc::bad_argument, "empty density grid");
    if (opts.trials < 1) fail(errc::bad_argument, "trials must be >= 1");
    for (const Rational& t : opts.grid)
        if (t <= Rational(0) || t > Rational(1))
            fail(errc::bad_argument, "grid density " + t.str() + " outside (0, 1]");

    const LinearTripleSystem base = generate_steiner(opts.n);

    const std::size_t total =
        opts.grid.size() * static_cast<std::size_t>(opts.trials);
    std::vector<SweepRow> rows(total);
    std::vector<std::exception_ptr> errors(total);
    std::atomic<std::size_t> next{0};

    auto run_task = [&](std::size_t idx) {
        const std::size_t gi = idx / static_cast<std::size_t>(opts.trials);
        const int trial = static_cast<int>(idx % static_cast<std::size_t>(opts.trials));
        SweepRow& row = rows[idx];
        row.delta = opts.grid[gi];
        row.trial = trial;
        row.n = opts.n;
        row.k = opts.k;
        const auto start = std::chrono::steady_clock::now();

        const LinearTripleSystem diluted =
            dilute(base, row.delta, opts.seed + static_cast<std::uint64_t>(trial));
        AnalyzeOptions ao;
        ao.k = opts.k;
        ao.budget = opts.budget;
        const AnalysisReport rep = analyze(diluted, ao);
        row.dB_defined = rep.b_avg_defined;
        if (rep.b_avg_defined) row.dB_avg = rep.b_avg_degree;
        row.witness_found = rep.has_witness;
        if (opts.timings)
            row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
    };

    unsigned workers = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                        : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(total));

    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i) {
            try {
                run_task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= total) return;
                    try {
                        run_task(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        for (std::thread& t : pool) t.join();
    }

    for (std::size_t i = 0; i < total; ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "delta,trial,n,dB_avg,witness_found,k,elapsed_ms\n";
    for (const SweepRow& r : rows) {
        out += fmt_csv_number(r.delta);
        out += ',';
        out += std::to_string(r.trial);
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += r.dB_defined ? fmt_csv_number(r.dB_avg) : "0";
        out += ',';
        out += r.witness_found ? "true" : "false";
        out += ',';
        out += std::to_string(r.k);
        out += ',';
        out += std::to_string(r.elapsed_ms);
        out += '\n';
    }
    return out;
}

}  // namespace l3g
