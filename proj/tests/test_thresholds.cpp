#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "l3g/thresholds.hpp"

using l3g::Rational;
using l3g::Thresholds;

namespace {

// Independent scan of the two n3 conditions in plain double arithmetic.
int scan_n3(double eps) {
    const double drop = eps / (4.0 + 5.0 * eps);
    for (int n = 1;; ++n) {
        const bool ratio_ok = (n - 1.0) / n >= 1.0 - drop - 1e-15;
        const bool tail_ok = 5.0 / (4.0 * n) <= eps / 2.0 + 1e-15;
        if (ratio_ok && tail_ok) return n;
    }
}

l3g::errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const l3g::Error& e) {
        return e.code();
    }
    return l3g::errc::internal_check_failed;
}

}  // namespace

TEST_CASE("the reference point eps = 1/20, k = 4") {
    const Thresholds t = l3g::compute_thresholds(Rational(1, 20), 4);
    CHECK(t.eps == Rational(1, 20));
    CHECK(t.delta == Rational(17, 20));
    CHECK(t.n1 == 15);
    CHECK(t.n3 == 85);
    CHECK(t.beta_log3 ==
          doctest::Approx(std::log(1.0 / 20.0) / std::log(3.0) - 176.0).epsilon(1e-12));
    CHECK(t.component_bound_exponent == 160);
    CHECK(t.n0_practical == 85);
    CHECK_FALSE(t.n2_known);
}

TEST_CASE("boundary eps = 1/5") {
    const Thresholds t = l3g::compute_thresholds(Rational(1, 5), 3);
    CHECK(t.delta == Rational(1));
    CHECK(t.n1 == 12);
    CHECK(t.n3 == 25);  // 1/n <= (1/5)/5 forces n >= 25; the tail needs only 13
    CHECK(t.component_bound_exponent == 90);
    CHECK(t.n0_practical == 25);
}

TEST_CASE("parameter validation") {
    CHECK(code_of([] { l3g::compute_thresholds(Rational(1, 4), 4); }) ==
          l3g::errc::bad_eps);
    CHECK(code_of([] { l3g::compute_thresholds(Rational(0), 4); }) == l3g::errc::bad_eps);
    CHECK(code_of([] { l3g::compute_thresholds(Rational(-1, 20), 4); }) ==
          l3g::errc::bad_eps);
    CHECK(code_of([] { l3g::compute_thresholds(Rational(1, 20), 2); }) ==
          l3g::errc::bad_k);
}

TEST_CASE("scan agrees with an independent implementation") {
    for (const Rational& eps :
         {Rational(1, 5), Rational(1, 10), Rational(1, 20), Rational(1, 50),
          Rational(1, 100), Rational(3, 20), Rational(7, 100)}) {
        CAPTURE(eps.str());
        const Thresholds t = l3g::compute_thresholds(eps, 5);
        CHECK(t.n3 == scan_n3(eps.to_double()));
        CHECK(t.n1 == static_cast<int>(std::ceil(12.0 / (0.8 + eps.to_double()) - 1e-12)));
        CHECK(t.n0_practical == std::max(t.n1, t.n3));
        // both defining conditions hold at n3 and the first fails at n3 - 1
        const Rational drop = eps / (Rational(4) + Rational(5) * eps);
        CHECK(Rational(t.n3 - 1, t.n3) >= Rational(1) - drop);
        CHECK(Rational(5, 4 * static_cast<std::int64_t>(t.n3)) <= eps / Rational(2));
        const bool prev_ok =
            Rational(t.n3 - 2, t.n3 - 1) >= Rational(1) - drop &&
            Rational(5, 4 * static_cast<std::int64_t>(t.n3 - 1)) <= eps / Rational(2);
        CHECK_FALSE(prev_ok);
    }
}

TEST_CASE("smaller eps pushes thresholds up") {
    int last_n1 = 0, last_n3 = 0;
    for (const Rational& eps :
         {Rational(1, 5), Rational(1, 10), Rational(1, 20), Rational(1, 40)}) {
        const Thresholds t = l3g::compute_thresholds(eps, 4);
        CHECK(t.n1 >= last_n1);
        CHECK(t.n3 >= last_n3);
        last_n1 = t.n1;
        last_n3 = t.n3;
    }
}
