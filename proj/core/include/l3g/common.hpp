#ifndef L3G_COMMON_HPP
#define L3G_COMMON_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace l3g {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Count = std::int64_t;

enum class errc {
    repeated_vertex_in_triple,
    vertex_out_of_range,
    pair_covered_twice,
    duplicate_triple,
    syntax_error,
    inadmissible_order,
    target_above_current,
    degenerate_system,
    degenerate_density,
    bad_eps,
    bad_k,
    bad_index,
    bad_argument,
    overflow,
    io_error,
    internal_check_failed,
};

const char* errc_name(errc c);

/// Library error. `internal_check_failed` marks a violated structural
/// invariant (a bug, not bad input); everything else is an input error.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what, int line = 0)
        : std::runtime_error(what), code_(code), line_(line) {}

    errc code() const { return code_; }
    // 1-based source line for syntax errors, 0 otherwise.
    int line() const { return line_; }

    bool is_internal() const { return code_ == errc::internal_check_failed; }

private:
    errc code_;
    int line_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg, int line = 0) {
    throw Error(code, msg, line);
}

inline void internal_check(bool ok, const std::string& msg) {
    if (!ok) fail(errc::internal_check_failed, "internal check failed: " + msg);
}

// All randomized operations run on a 64-bit Mersenne twister seeded
// directly with the caller's seed, so a (seed, n) pair fully determines
// the output on every platform.
using Rng = std::mt19937_64;

/// Unbiased uniform draw from [0, n) by rejection; n > 0.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r < threshold);
    return r % n;
}

/// In-place Fisher-Yates shuffle, deterministic given the rng state.
template <typename T>
void rng_shuffle(Rng& rng, std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace l3g

#endif
