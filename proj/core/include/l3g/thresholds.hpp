#ifndef L3G_THRESHOLDS_HPP
#define L3G_THRESHOLDS_HPP

#include "l3g/rational.hpp"

namespace l3g {

/// Constants attached to a density offset eps and a configuration size k.
/// Two of the source quantities are astronomically large, so they are kept
/// in log/exponent form: beta_log3 is log base 3 of the auxiliary constant
/// beta = eps * 3^{-11k^2}, and component_bound_exponent is the exponent E
/// of the component-size cutoff 3^E. The third analytic order bound (n2) has
/// no formula available here and stays unknown; n0_practical is the max of
/// the two computable ones.
struct Thresholds {
    Rational eps;
    Rational delta;               // 4/5 + eps
    int n1 = 0;                   // ceil(12/delta)
    int n3 = 0;                   // minimal n passing both average-degree side conditions
    double beta_log3 = 0.0;       // log3(eps) - 11k^2
    int component_bound_exponent = 0;  // 10k^2
    int n0_practical = 0;         // max(n1, n3)
    bool n2_known = false;        // always false: no formula for n2
};

/// Computes every threshold for eps in (0, 1/5] and k >= 3. n3 is found by
/// a direct scan from n = 1 upward; both defining conditions are monotone
/// in n and checked with exact rationals. Throws BadEps / BadK on a
/// parameter outside the admitted range.
Thresholds compute_thresholds(const Rational& eps, int k);

}  // namespace l3g

#endif
