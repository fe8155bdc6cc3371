#pragma once

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "landau_paraxial/errors.hpp"

namespace landau_paraxial {

/// Generalized Laguerre polynomial L_n^alpha(x) by upward three-term recurrence.
inline double laguerre(int n, int alpha, double x)
{
    if (n < 0 || alpha < 0) {
        throw DomainError("laguerre: n and alpha must be non-negative (n=" + std::to_string(n) +
                          ", alpha=" + std::to_string(alpha) + ")");
    }
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double curr = 1.0 + alpha - x;
    for (int k = 2; k <= n; ++k) {
        const double next = ((2.0 * k - 1.0 + alpha - x) * curr - (k - 1.0 + alpha) * prev) / k;
        prev = curr;
        curr = next;
    }
    return curr;
}

/// C_{n,l} = sqrt(2 n! / (pi (n+|l|)!)); factorial ratio evaluated in log space.
inline double mode_norm_constant(int n, int ell)
{
    if (n < 0) {
        throw DomainError("mode_norm_constant: n must be non-negative");
    }
    const int abs_ell = std::abs(ell);
    const double log_ratio = std::lgamma(n + 1.0) - std::lgamma(n + abs_ell + 1.0);
    return std::sqrt(2.0 / std::numbers::pi * std::exp(log_ratio));
}

} // namespace landau_paraxial
