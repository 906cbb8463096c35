/* Shared test helpers.
 * SPDX-License-Identifier: Apache-2.0 */
#ifndef HHL_TEST_UTIL_HPP
#define HHL_TEST_UTIL_HPP

#include <cmath>
#include <cstdint>

namespace testutil {

// Small deterministic generator for property-style tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        return state_ = x;
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (next() >> 11) * 0x1.0p-53;
    }
    double log_uniform(double lo, double hi) {
        return lo * std::exp(uniform(0.0, std::log(hi / lo)));
    }
    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

inline double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

// Rounds to the number of decimals a printed reference value carries,
// for comparisons at the table's own precision.
inline double round_to_decimals(double v, int decimals) {
    double f = 1.0;
    for (int i = 0; i < decimals; ++i) f *= 10.0;
    return std::round(v * f) / f;
}

}  // namespace testutil

#endif
