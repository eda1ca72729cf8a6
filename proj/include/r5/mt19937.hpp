#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "r5/errors.hpp"
#include "r5/seed.hpp"

namespace r5 {

inline constexpr std::size_t kMtWords = 624;

/// Raw generator state: the 624-word table and the read cursor.
/// A cursor of 624 means the next draw twists the table first.
struct MtState {
    std::array<std::uint32_t, kMtWords> words{};
    std::size_t cursor = kMtWords;

    friend bool operator==(const MtState&, const MtState&) = default;
};

/// Reference MT19937 parameters.
struct Mt19937Traits {
    static constexpr std::size_t shift_size = 397;
    static constexpr std::uint32_t matrix_a = 0x9908b0dfu;
    static constexpr std::uint32_t upper_mask = 0x80000000u;
    static constexpr std::uint32_t lower_mask = 0x7fffffffu;

    static constexpr unsigned tempering_u = 11;
    static constexpr unsigned tempering_s = 7;
    static constexpr std::uint32_t tempering_b = 0x9d2c5680u;
    static constexpr unsigned tempering_t = 15;
    static constexpr std::uint32_t tempering_c = 0xefc60000u;
    static constexpr unsigned tempering_l = 18;

    static constexpr std::uint32_t scalar_multiplier = 1812433253u;
    static constexpr std::uint32_t array_base_seed = 19650218u;
    static constexpr std::uint32_t array_mix_a = 1664525u;
    static constexpr std::uint32_t array_mix_b = 1566083941u;
};

/// Mersenne Twister generator, bit-compatible with the reference mt19937ar
/// code for both of its seeding routines.
///
/// Traits exist so tests can build deliberately broken variants; production
/// code uses the Mt19937 alias.
template <class Traits = Mt19937Traits>
class BasicMt19937 {
public:
    using result_type = std::uint32_t;

    explicit BasicMt19937(const SeedSpec& spec) { seed(spec); }

    explicit BasicMt19937(const MtState& state) { import_state(state); }

    void seed(const SeedSpec& spec) {
        spec.validate();
        if (spec.scheme == SeedScheme::LegacyScalar) {
            seed_scalar(spec.value.low_u32());
        } else {
            seed_array(std::span<const std::uint32_t>(spec.value.key_words()));
        }
    }

    result_type next_u32() noexcept {
        if (state_.cursor >= kMtWords) {
            twist();
        }
        std::uint32_t y = state_.words[state_.cursor++];
        y ^= y >> Traits::tempering_u;
        y ^= (y << Traits::tempering_s) & Traits::tempering_b;
        y ^= (y << Traits::tempering_t) & Traits::tempering_c;
        y ^= y >> Traits::tempering_l;
        return y;
    }

    result_type operator()() noexcept { return next_u32(); }

    MtState export_state() const { return state_; }

    void import_state(const MtState& state) {
        if (state.cursor > kMtWords) {
            throw StateFormatError("mt19937 state: cursor " + std::to_string(state.cursor) +
                                   " outside [0, 624]");
        }
        state_ = state;
    }

    /// Import from loosely typed input (parsed text, foreign tuples).
    void import_state(std::span<const std::uint64_t> words, std::int64_t cursor) {
        if (words.size() != kMtWords) {
            throw StateFormatError("mt19937 state: expected 624 words, got " +
                                   std::to_string(words.size()));
        }
        if (cursor < 0 || cursor > static_cast<std::int64_t>(kMtWords)) {
            throw StateFormatError("mt19937 state: cursor " + std::to_string(cursor) +
                                   " outside [0, 624]");
        }
        MtState next;
        for (std::size_t i = 0; i < kMtWords; ++i) {
            if (words[i] > 0xffffffffu) {
                throw StateFormatError("mt19937 state: word " + std::to_string(i) +
                                       " does not fit in 32 bits");
            }
            next.words[i] = static_cast<std::uint32_t>(words[i]);
        }
        next.cursor = static_cast<std::size_t>(cursor);
        state_ = next;
    }

    std::size_t cursor() const noexcept { return state_.cursor; }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return 0xffffffffu; }

private:
    void seed_scalar(std::uint32_t s) noexcept {
        auto& mt = state_.words;
        mt[0] = s;
        for (std::size_t i = 1; i < kMtWords; ++i) {
            mt[i] = Traits::scalar_multiplier * (mt[i - 1] ^ (mt[i - 1] >> 30)) +
                    static_cast<std::uint32_t>(i);
        }
        state_.cursor = kMtWords;
    }

    void seed_array(std::span<const std::uint32_t> key) noexcept {
        seed_scalar(Traits::array_base_seed);
        auto& mt = state_.words;
        std::size_t i = 1;
        std::size_t j = 0;
        for (std::size_t k = std::max(kMtWords, key.size()); k > 0; --k) {
            mt[i] = (mt[i] ^ ((mt[i - 1] ^ (mt[i - 1] >> 30)) * Traits::array_mix_a)) + key[j] +
                    static_cast<std::uint32_t>(j);
            ++i;
            ++j;
            if (i >= kMtWords) {
                mt[0] = mt[kMtWords - 1];
                i = 1;
            }
            if (j >= key.size()) {
                j = 0;
            }
        }
        for (std::size_t k = kMtWords - 1; k > 0; --k) {
            mt[i] = (mt[i] ^ ((mt[i - 1] ^ (mt[i - 1] >> 30)) * Traits::array_mix_b)) -
                    static_cast<std::uint32_t>(i);
            ++i;
            if (i >= kMtWords) {
                mt[0] = mt[kMtWords - 1];
                i = 1;
            }
        }
        mt[0] = 0x80000000u;
        state_.cursor = kMtWords;
    }

    void twist() noexcept {
        constexpr std::size_t n = kMtWords;
        constexpr std::size_t m = Traits::shift_size;
        auto& mt = state_.words;
        auto mix = [](std::uint32_t hi, std::uint32_t lo, std::uint32_t far) {
            std::uint32_t y = (hi & Traits::upper_mask) | (lo & Traits::lower_mask);
            return far ^ (y >> 1) ^ ((y & 1u) ? Traits::matrix_a : 0u);
        };
        std::size_t k = 0;
        for (; k < n - m; ++k) {
            mt[k] = mix(mt[k], mt[k + 1], mt[k + m]);
        }
        for (; k < n - 1; ++k) {
            mt[k] = mix(mt[k], mt[k + 1], mt[k + m - n]);
        }
        mt[n - 1] = mix(mt[n - 1], mt[0], mt[m - 1]);
        state_.cursor = 0;
    }

    MtState state_;
};

using Mt19937 = BasicMt19937<>;

}  // namespace r5
