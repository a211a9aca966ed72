#pragma once

#include <cstdint>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclekit {

using bigint = boost::multiprecision::cpp_int;

/* Uniform integer in [0, n) for arbitrary-size n (rejection over msb window). */
template <class Rng>
bigint uniform_below(const bigint& n, Rng& rng) {
    if (n <= 1) return 0;
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    const unsigned words = (bits + 63) / 64;
    while (true) {
        bigint r = 0;
        for (unsigned i = 0; i < words; ++i) {
            r <<= 64;
            r |= bigint(static_cast<std::uint64_t>(rng()));
        }
        r >>= (words * 64 - bits);
        if (r < n) return r;
    }
}

/* Uniform integer in [0, n), implementation-independent (plain rejection). */
template <class Rng>
std::uint64_t uniform_u64(std::uint64_t n, Rng& rng) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    while (true) {
        std::uint64_t r = rng();
        if (r < limit) return r % n;
    }
}

/* Index sampled with probability weights[i] / sum(weights); zero weights allowed. */
template <class Rng>
size_t weighted_pick(const std::vector<bigint>& weights, Rng& rng) {
    bigint total = 0;
    for (const auto& w : weights) total += w;
    bigint r = uniform_below(total, rng);
    for (size_t i = 0; i < weights.size(); ++i) {
        if (r < weights[i]) return i;
        r -= weights[i];
    }
    return weights.size() - 1; // unreachable for total > 0
}

} // namespace cyclekit
