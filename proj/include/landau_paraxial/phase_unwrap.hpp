#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace landau_paraxial {

/// Removes 2*pi jumps so successive differences lie in [-pi, pi).
///
/// Assumes the true phase changes by less than pi between samples; a faster
/// true rotation is aliased and cannot be detected from the samples alone.
inline std::vector<double> unwrap_phase(std::span<const double> raw)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> out(raw.begin(), raw.end());
    if (out.empty()) {
        return out;
    }
    // Integer turn count keeps out[i] - raw[i] an exact multiple of 2*pi.
    long long turns = 0;
    for (std::size_t i = 1; i < raw.size(); ++i) {
        const double d = raw[i] - raw[i - 1];
        turns -= static_cast<long long>(std::floor((d + std::numbers::pi) / two_pi));
        out[i] = raw[i] + two_pi * static_cast<double>(turns);
    }
    return out;
}

} // namespace landau_paraxial
