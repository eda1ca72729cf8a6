#pragma once

#include <bit>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>

#include "r5/errors.hpp"

namespace r5 {

template <class G>
concept Uint32Source = requires(G& g) {
    { g.next_u32() } -> std::same_as<std::uint32_t>;
};

/// 53-bit double in [0, 1) built from two consecutive 32-bit draws
/// (27 high bits of the first, 26 high bits of the second).
template <Uint32Source G>
double next_f64(G& gen) {
    const std::uint32_t a = gen.next_u32() >> 5;
    const std::uint32_t b = gen.next_u32() >> 6;
    return (static_cast<double>(a) * 67108864.0 + static_cast<double>(b)) * (1.0 / 9007199254740992.0);
}

template <Uint32Source G>
double uniform(G& gen, double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("uniform: bounds must be finite");
    }
    return a + (b - a) * next_f64(gen);
}

/// Top k bits of one 32-bit draw.
template <Uint32Source G>
std::uint32_t getrandbits(G& gen, int k) {
    if (k < 1 || k > 32) {
        throw DomainError("getrandbits: k must be in [1, 32], got " + std::to_string(k));
    }
    return gen.next_u32() >> (32 - k);
}

/// Index in [0, n) by scaling one double: floor(next_f64 * n).
template <Uint32Source G>
std::int64_t choice_legacy(G& gen, std::int64_t n) {
    if (n < 1) {
        throw DomainError("choice_legacy: n must be >= 1, got " + std::to_string(n));
    }
    return static_cast<std::int64_t>(std::floor(next_f64(gen) * static_cast<double>(n)));
}

/// Index in [0, n) by rejection: draw bit_length(n) bits until the value is
/// below n. For n = 1 this still consumes at least one draw.
template <Uint32Source G>
std::int64_t choice_modern(G& gen, std::int64_t n) {
    if (n < 1) {
        throw DomainError("choice_modern: n must be >= 1, got " + std::to_string(n));
    }
    if (n > static_cast<std::int64_t>(0xffffffffu)) {
        throw DomainError("choice_modern: n must be below 2^32, got " + std::to_string(n));
    }
    const auto bound = static_cast<std::uint32_t>(n);
    const int k = std::bit_width(bound);
    std::uint32_t r = getrandbits(gen, k);
    while (r >= bound) {
        r = getrandbits(gen, k);
    }
    return r;
}

}  // namespace r5
