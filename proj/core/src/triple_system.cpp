#include "l3g/triple_system.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace l3g {

LinearTripleSystem LinearTripleSystem::validate(
    int n, const std::vector<std::array<std::int64_t, 3>>& raw,
    const std::vector<int>* source_lines) {
    if (n < 0) fail(errc::bad_argument, "negative vertex count");

    LinearTripleSystem h;
    h.n_ = n;
    h.edges_.reserve(raw.size());
    h.pair_to_edge_.assign(static_cast<std::size_t>(n) * n, -1);
    h.degree_.assign(static_cast<std::size_t>(n), 0);
    h.incidence_.assign(static_cast<std::size_t>(n), {});

    for (std::size_t i = 0; i < raw.size(); ++i) {
        const int line = source_lines ? (*source_lines)[i] : 0;
        const std::string where =
            line > 0 ? "line " + std::to_string(line) : "triple " + std::to_string(i);
        std::array<std::int64_t, 3> t = raw[i];
        std::sort(t.begin(), t.end());
        for (std::int64_t x : t)
            if (x < 0 || x >= n)
                fail(errc::vertex_out_of_range,
                     where + ": vertex " + std::to_string(x) + " not in [0, " +
                         std::to_string(n) + ")",
                     line);
        if (t[0] == t[1] || t[1] == t[2])
            fail(errc::repeated_vertex_in_triple,
                 where + " has fewer than 3 distinct vertices", line);

        const Triple triple{{static_cast<VertexId>(t[0]), static_cast<VertexId>(t[1]),
                             static_cast<VertexId>(t[2])}};
        const EdgeId id = static_cast<EdgeId>(h.edges_.size());

        const std::array<std::pair<VertexId, VertexId>, 3> pairs = {
            std::pair{triple.a(), triple.b()},
            std::pair{triple.a(), triple.c()},
            std::pair{triple.b(), triple.c()},
        };
        for (auto [u, v] : pairs) {
            EdgeId& slot = h.pair_to_edge_[static_cast<std::size_t>(u) * n + v];
            if (slot >= 0) {
                if (h.edges_[static_cast<std::size_t>(slot)] == triple)
                    fail(errc::duplicate_triple,
                         where + " duplicates triple " + std::to_string(slot), line);
                fail(errc::pair_covered_twice,
                     where + " covers pair {" + std::to_string(u) + "," +
                         std::to_string(v) + "} already covered by triple " +
                         std::to_string(slot),
                     line);
            }
            slot = id;
        }
        for (VertexId x : triple.v) {
            h.degree_[static_cast<std::size_t>(x)] += 1;
            h.incidence_[static_cast<std::size_t>(x)].push_back(id);
        }
        h.edges_.push_back(triple);
    }
    return h;
}

Rational LinearTripleSystem::linear_density() const {
    if (n_ < 2) fail(errc::degenerate_system, "density needs n >= 2");
    const std::int64_t pairs = static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
    return Rational(3 * static_cast<std::int64_t>(m()), pairs);
}

bool LinearTripleSystem::is_steiner() const {
    return n_ >= 3 && 6 * static_cast<std::int64_t>(m()) ==
                          static_cast<std::int64_t>(n_) * (n_ - 1);
}

namespace {

using RawTriples = std::vector<std::array<std::int64_t, 3>>;

// Bose construction, n = 6t+3: vertices are Z_{2t+1} x {0,1,2} with the
// idempotent commutative quasigroup x*y = (x+y)(t+1) mod 2t+1.
RawTriples bose_triples(int n) {
    const int q = n / 3;  // 2t+1, odd
    const int half = (q + 1) / 2;
    auto id = [&](int x, int layer) { return static_cast<std::int64_t>(x + layer * q); };
    auto mul = [&](int x, int y) { return static_cast<int>((static_cast<std::int64_t>(x + y) * half) % q); };

    RawTriples triples;
    for (int x = 0; x < q; ++x) triples.push_back({id(x, 0), id(x, 1), id(x, 2)});
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y)
            for (int layer = 0; layer < 3; ++layer)
                triples.push_back(
                    {id(x, layer), id(y, layer), id(mul(x, y), (layer + 1) % 3)});
    return triples;
}

// Skolem construction, n = 6t+1: vertices are Z_{2t} x {0,1,2} plus one
// point at infinity, over the half-idempotent commutative quasigroup
// obtained from (Z_{2t}, +) by relabeling 2k -> k, 2k+1 -> t+k.
RawTriples skolem_triples(int n) {
    const int q = (n - 1) / 3;  // 2t
    const int t = q / 2;
    const std::int64_t inf = n - 1;
    auto id = [&](int x, int layer) { return static_cast<std::int64_t>(x + layer * q); };
    auto mul = [&](int x, int y) {
        const int s = (x + y) % q;
        return s % 2 == 0 ? s / 2 : t + (s - 1) / 2;
    };

    RawTriples triples;
    for (int x = 0; x < t; ++x) triples.push_back({id(x, 0), id(x, 1), id(x, 2)});
    for (int x = t; x < q; ++x) {
        triples.push_back({inf, id(x, 0), id(x - t, 1)});
        triples.push_back({inf, id(x, 1), id(x - t, 2)});
        triples.push_back({inf, id(x, 2), id(x - t, 0)});
    }
    for (int x = 0; x < q; ++x)
        for (int y = x + 1; y < q; ++y)
            for (int layer = 0; layer < 3; ++layer)
                triples.push_back(
                    {id(x, layer), id(y, layer), id(mul(x, y), (layer + 1) % 3)});
    return triples;
}

}  // namespace

LinearTripleSystem generate_steiner(int n) {
    if (n < 1 || (n % 6 != 1 && n % 6 != 3))
        fail(errc::inadmissible_order,
             "no Steiner triple system of order " + std::to_string(n) +
                 " (need n = 1 or 3 mod 6, n >= 1)");
    if (n == 1) return LinearTripleSystem::validate(1, {});
    RawTriples triples = n % 6 == 3 ? bose_triples(n) : skolem_triples(n);
    LinearTripleSystem h = LinearTripleSystem::validate(n, triples);
    internal_check(h.is_steiner(), "generated system is not Steiner");
    return h;
}

RandomLinearResult generate_random_linear(int n, const Rational& target_density,
                                          std::uint64_t seed) {
    if (n < 3) fail(errc::bad_argument, "random generation needs n >= 3");
    if (target_density.num() <= 0 || target_density > Rational(1))
        fail(errc::bad_argument, "target density must be in (0, 1]");

    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    // 3m / C(n,2) >= p/q  <=>  3mq >= p*C(n,2)
    auto reached = [&](std::int64_t m) {
        return 3 * m * target_density.den() >= target_density.num() * pairs;
    };

    Rng rng(seed);
    std::vector<EdgeId> cover(static_cast<std::size_t>(n) * n, -1);
    auto covered = [&](int u, int v) { return cover[static_cast<std::size_t>(u) * n + v] >= 0; };
    RawTriples accepted;

    auto insertable = [&](int a, int b, int c) {
        return !covered(a, b) && !covered(a, c) && !covered(b, c);
    };
    auto insert = [&](int a, int b, int c) {
        const EdgeId id = static_cast<EdgeId>(accepted.size());
        cover[static_cast<std::size_t>(a) * n + b] = id;
        cover[static_cast<std::size_t>(a) * n + c] = id;
        cover[static_cast<std::size_t>(b) * n + c] = id;
        accepted.push_back({a, b, c});
    };

    constexpr int kMaxRejects = 2000;
    while (!reached(static_cast<std::int64_t>(accepted.size()))) {
        bool inserted = false;
        for (int attempt = 0; attempt < kMaxRejects; ++attempt) {
            int a = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n)));
            int b = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n)));
            int c = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n)));
            if (a == b || a == c || b == c) continue;
            int lo = std::min({a, b, c}), hi = std::max({a, b, c});
            int mid = a + b + c - lo - hi;
            if (!insertable(lo, mid, hi)) continue;
            insert(lo, mid, hi);
            inserted = true;
            break;
        }
        if (inserted) continue;

        // Rejection stalled: enumerate the remaining insertable triples and
        // pick one uniformly, or stop if the system is saturated.
        std::vector<std::array<int, 3>> candidates;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (covered(a, b)) continue;
                for (int c = b + 1; c < n; ++c)
                    if (!covered(a, c) && !covered(b, c)) candidates.push_back({a, b, c});
            }
        if (candidates.empty()) break;
        const auto& pick =
            candidates[rng_below(rng, static_cast<std::uint64_t>(candidates.size()))];
        insert(pick[0], pick[1], pick[2]);
    }

    RandomLinearResult result{LinearTripleSystem::validate(n, accepted), Rational(0)};
    if (n >= 2) result.achieved_density = result.system.linear_density();
    return result;
}

LinearTripleSystem dilute(const LinearTripleSystem& h, const Rational& target_density,
                          std::uint64_t seed) {
    const Rational current = h.linear_density();
    if (target_density > current)
        fail(errc::target_above_current, "dilution target " + target_density.str() +
                                             " above current density " + current.str());

    // Smallest m' with 3m'/C(n,2) >= target; delete a uniformly random set
    // of m - m' edges, keeping the survivors in their original order.
    const std::int64_t pairs = static_cast<std::int64_t>(h.n()) * (h.n() - 1) / 2;
    std::int64_t keep = 0;
    if (target_density.num() > 0) {
        const Rational m_min = target_density * Rational(pairs, 3);
        keep = ceil_div(m_min);
    }

    std::vector<EdgeId> order(static_cast<std::size_t>(h.m()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<EdgeId>(i);
    Rng rng(seed);
    rng_shuffle(rng, order);

    std::vector<bool> deleted(static_cast<std::size_t>(h.m()), false);
    const std::int64_t to_delete = static_cast<std::int64_t>(h.m()) - keep;
    for (std::int64_t i = 0; i < to_delete; ++i)
        deleted[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = true;

    RawTriples survivors;
    for (int i = 0; i < h.m(); ++i) {
        if (deleted[static_cast<std::size_t>(i)]) continue;
        const Triple& t = h.edge(i);
        survivors.push_back({t.a(), t.b(), t.c()});
    }
    return LinearTripleSystem::validate(h.n(), survivors);
}

LinearTripleSystem parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    RawTriples triples;
    std::vector<int> triple_lines;

    auto is_blank_or_comment = [](const std::string& s) {
        for (char ch : s) {
            if (ch == '#') return true;
            if (!std::isspace(static_cast<unsigned char>(ch))) return false;
        }
        return true;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n >> m) || n < 0 || m < 0)
                fail(errc::syntax_error,
                     "line " + std::to_string(lineno) + ": expected header \"n m\"", lineno);
            std::string rest;
            if (fields >> rest)
                fail(errc::syntax_error,
                     "line " + std::to_string(lineno) + ": trailing content after header",
                     lineno);
            continue;
        }
        long long a, b, c;
        if (!(fields >> a >> b >> c))
            fail(errc::syntax_error,
                 "line " + std::to_string(lineno) + ": expected three vertex ids", lineno);
        std::string rest;
        if (fields >> rest)
            fail(errc::syntax_error,
                 "line " + std::to_string(lineno) + ": trailing content after triple", lineno);
        if (static_cast<long long>(triples.size()) >= m)
            fail(errc::syntax_error,
                 "line " + std::to_string(lineno) + ": more than " + std::to_string(m) +
                     " triples",
                 lineno);
        triples.push_back({a, b, c});
        triple_lines.push_back(lineno);
    }
    if (n < 0) fail(errc::syntax_error, "missing header line \"n m\"", lineno);
    if (static_cast<long long>(triples.size()) != m)
        fail(errc::syntax_error,
             "expected " + std::to_string(m) + " triples, got " +
                 std::to_string(triples.size()),
             lineno);
    if (n > (1 << 30)) fail(errc::syntax_error, "vertex count out of range", 1);
    return LinearTripleSystem::validate(static_cast<int>(n), triples, &triple_lines);
}

std::string serialize(const LinearTripleSystem& h) {
    std::ostringstream out;
    out << h.n() << ' ' << h.m() << '\n';
    for (const Triple& t : h.edges())
        out << t.a() << ' ' << t.b() << ' ' << t.c() << '\n';
    return out.str();
}

}  // namespace l3g
