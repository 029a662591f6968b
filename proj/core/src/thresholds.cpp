#include "l3g/thresholds.hpp"

#include <cmath>

namespace l3g {

Thresholds compute_thresholds(const Rational& eps, int k) {
    if (eps <= Rational(0) || eps > Rational(1, 5))
        fail(errc::bad_eps, "eps must lie in (0, 1/5], got " + eps.str());
    if (k < 3) fail(errc::bad_k, "k must be >= 3, got " + std::to_string(k));

    Thresholds t;
    t.eps = eps;
    t.delta = Rational(4, 5) + eps;
    t.n1 = static_cast<int>(ceil_div(Rational(12) / t.delta));

    // Minimal n with (n-1)/n >= 1 - eps/(4+5 eps) and 5/(4n) <= eps/2.
    const Rational drop = eps / (Rational(4) + Rational(5) * eps);
    const Rational half_eps = eps / Rational(2);
    int n = 1;
    while (true) {
        const bool ratio_ok = Rational(n - 1, n) >= Rational(1) - drop;
        const bool tail_ok = Rational(5, 4 * static_cast<std::int64_t>(n)) <= half_eps;
        if (ratio_ok && tail_ok) break;
        ++n;
        if (n > 100'000'000) fail(errc::overflow, "n3 scan exceeded 1e8");
    }
    t.n3 = n;

    const double k2 = static_cast<double>(k) * k;
    t.beta_log3 = std::log(eps.to_double()) / std::log(3.0) - 11.0 * k2;
    t.component_bound_exponent = 10 * k * k;
    t.n0_practical = std::max(t.n1, t.n3);
    t.n2_known = false;
    return t;
}

}  // namespace l3g
