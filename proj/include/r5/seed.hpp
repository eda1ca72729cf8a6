#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "r5/errors.hpp"

namespace r5 {

/// Non-negative arbitrary-precision seed value.
///
/// Stored as little-endian 32-bit limbs with no high zero limbs; zero is the
/// empty limb vector. key_words() gives the array-initialization key, where
/// zero becomes the single word [0].
class SeedValue {
public:
    SeedValue() = default;

    explicit SeedValue(std::uint64_t value) {
        while (value != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(value & 0xffffffffu));
            value >>= 32;
        }
    }

    /// Parses a plain decimal integer. Leading zeros are accepted; signs,
    /// whitespace and an empty string are not.
    static SeedValue from_decimal(std::string_view text) {
        if (text.empty()) {
            throw SeedDomainError("seed: empty value");
        }
        if (text.front() == '-') {
            throw SeedDomainError("seed: negative values are not accepted: " + std::string(text));
        }
        SeedValue out;
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw SeedDomainError("seed: not a decimal integer: " + std::string(text));
            }
            out.mul_add(10, static_cast<std::uint32_t>(c - '0'));
        }
        return out;
    }

    static SeedValue from_words(std::vector<std::uint32_t> words) {
        SeedValue out;
        out.limbs_ = std::move(words);
        out.trim();
        return out;
    }

    std::string to_decimal() const {
        if (limbs_.empty()) {
            return "0";
        }
        std::vector<std::uint32_t> work = limbs_;
        std::vector<std::uint32_t> chunks;  // base 1e9, least significant first
        while (!work.empty()) {
            std::uint64_t rem = 0;
            for (auto it = work.rbegin(); it != work.rend(); ++it) {
                std::uint64_t cur = (rem << 32) | *it;
                *it = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            chunks.push_back(static_cast<std::uint32_t>(rem));
            while (!work.empty() && work.back() == 0) {
                work.pop_back();
            }
        }
        std::string out = std::to_string(chunks.back());
        for (auto it = chunks.rbegin() + 1; it != chunks.rend(); ++it) {
            std::string part = std::to_string(*it);
            out.append(9 - part.size(), '0');
            out += part;
        }
        return out;
    }

    const std::vector<std::uint32_t>& limbs() const noexcept { return limbs_; }

    std::vector<std::uint32_t> key_words() const {
        if (limbs_.empty()) {
            return {0u};
        }
        return limbs_;
    }

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool fits_u32() const noexcept { return limbs_.size() <= 1; }
    std::uint32_t low_u32() const noexcept { return limbs_.empty() ? 0u : limbs_.front(); }

    friend bool operator==(const SeedValue&, const SeedValue&) = default;

private:
    void mul_add(std::uint32_t mul, std::uint32_t add) {
        std::uint64_t carry = add;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry));
        }
    }

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) {
            limbs_.pop_back();
        }
    }

    std::vector<std::uint32_t> limbs_;
};

enum class SeedScheme {
    BigIntArray,   // integer split into 32-bit words, array initialization
    LegacyScalar,  // single 32-bit word, scalar initialization
};

inline std::string_view to_string(SeedScheme scheme) {
    return scheme == SeedScheme::BigIntArray ? "bigint" : "legacy";
}

inline SeedScheme parse_seed_scheme(std::string_view text) {
    if (text == "bigint") return SeedScheme::BigIntArray;
    if (text == "legacy") return SeedScheme::LegacyScalar;
    throw DomainError("unknown seed scheme: " + std::string(text));
}

struct SeedSpec {
    SeedScheme scheme = SeedScheme::BigIntArray;
    SeedValue value;

    static SeedSpec bigint(std::uint64_t v) { return {SeedScheme::BigIntArray, SeedValue(v)}; }
    static SeedSpec legacy(std::uint64_t v) { return {SeedScheme::LegacyScalar, SeedValue(v)}; }

    void validate() const {
        if (scheme == SeedScheme::LegacyScalar && !value.fits_u32()) {
            throw SeedDomainError("seed: legacy scheme requires a value below 2^32, got " +
                                  value.to_decimal());
        }
    }

    friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

}  // namespace r5
