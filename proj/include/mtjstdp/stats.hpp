#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace mtjstdp {

struct Interval {
    double low = 0.0;
    double high = 0.0;
};

// 95% Wilson score interval; well behaved at p in {0, 1}.
inline Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.96) {
    if (trials == 0) throw std::invalid_argument("wilson_interval: trials must be >= 1");
    const double n = static_cast<double>(trials);
    const double x = static_cast<double>(successes);
    const double z2 = z * z;
    const double denom = n + z2;
    const double center = (x + 0.5 * z2) / denom;
    const double half = z / denom * std::sqrt(x * (n - x) / n + 0.25 * z2);
    return {std::fmax(0.0, center - half), std::fmin(1.0, center + half)};
}

// Two-proportion z statistic (pooled); positive when p1 > p2.
inline double two_proportion_z(std::uint64_t x1, std::uint64_t n1, std::uint64_t x2,
                               std::uint64_t n2) {
    if (n1 == 0 || n2 == 0) throw std::invalid_argument("two_proportion_z: empty sample");
    const double p1 = static_cast<double>(x1) / static_cast<double>(n1);
    const double p2 = static_cast<double>(x2) / static_cast<double>(n2);
    const double pooled = static_cast<double>(x1 + x2) / static_cast<double>(n1 + n2);
    const double se = std::sqrt(pooled * (1.0 - pooled) * (1.0 / n1 + 1.0 / n2));
    if (se == 0.0) return 0.0;
    return (p1 - p2) / se;
}

}  // namespace mtjstdp
