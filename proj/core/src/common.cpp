#include "l3g/common.hpp"

#include <cctype>
#include <cstdlib>

#include "l3g/rational.hpp"

namespace l3g {

const char* errc_name(errc c) {
    switch (c) {
        case errc::repeated_vertex_in_triple: return "RepeatedVertexInTriple";
        case errc::vertex_out_of_range: return "VertexOutOfRange";
        case errc::pair_covered_twice: return "PairCoveredTwice";
        case errc::duplicate_triple: return "DuplicateTriple";
        case errc::syntax_error: return "SyntaxError";
        case errc::inadmissible_order: return "InadmissibleOrder";
        case errc::target_above_current: return "TargetAboveCurrent";
        case errc::degenerate_system: return "DegenerateSystem";
        case errc::degenerate_density: return "DegenerateDensity";
        case errc::bad_eps: return "BadEps";
        case errc::bad_k: return "BadK";
        case errc::bad_index: return "BadIndex";
        case errc::bad_argument: return "BadArgument";
        case errc::overflow: return "Overflow";
        case errc::io_error: return "IoError";
        case errc::internal_check_failed: return "InternalCheckFailed";
    }
    return "UnknownError";
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) fail(errc::bad_argument, "empty rational literal");

    auto parse_int = [](const std::string& s) -> std::int64_t {
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            fail(errc::bad_argument, "bad rational literal: " + s);
        }
        if (pos != s.size()) fail(errc::bad_argument, "bad rational literal: " + s);
        return v;
    };

    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::int64_t num = parse_int(text.substr(0, slash));
        const std::int64_t den = parse_int(text.substr(slash + 1));
        if (den == 0) fail(errc::bad_argument, "zero denominator: " + text);
        return Rational(num, den);
    }

    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_int(text));

    // Decimal literal: integer part + fractional digits over a power of ten.
    const std::string ipart = text.substr(0, dot);
    const std::string fpart = text.substr(dot + 1);
    if (fpart.size() > 18) fail(errc::bad_argument, "decimal too long: " + text);
    for (char ch : fpart)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            fail(errc::bad_argument, "bad rational literal: " + text);
    bool negative = !ipart.empty() && ipart[0] == '-';
    const std::int64_t whole = ipart.empty() || ipart == "-" ? 0 : parse_int(ipart);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < fpart.size(); ++i) scale *= 10;
    const std::int64_t frac = fpart.empty() ? 0 : parse_int(fpart);
    Rational r = Rational(whole) + Rational(negative ? -frac : frac, scale);
    return r;
}

}  // namespace l3g
