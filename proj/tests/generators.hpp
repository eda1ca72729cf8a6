#pragma once

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "r5/record.hpp"
#include "r5/walks.hpp"

// Hand-rolled generators for the property suites.
namespace r5::testing {

inline WalkParams random_params(std::mt19937_64& rng) {
    static constexpr WalkModel models[] = {WalkModel::ChoiceLegacy, WalkModel::ChoiceModern,
                                           WalkModel::Uniform, WalkModel::UniformVectorized};
    WalkParams p;
    p.count = static_cast<std::int64_t>(rng() % 64);
    p.x0 = static_cast<std::int64_t>(rng() % 2001) - 1000;
    p.step = 1 + static_cast<std::int64_t>(rng() % 5);
    if (rng() % 4 == 0) {
        p.seed = SeedSpec::legacy(rng() & 0xffffffffu);
    } else {
        p.seed = {SeedScheme::BigIntArray, SeedValue(rng() >> (rng() % 64))};
    }
    p.model = models[rng() % 4];
    return p;
}

inline ResultRecord random_record(std::mt19937_64& rng) {
    static constexpr WalkModel models[] = {WalkModel::ChoiceLegacy, WalkModel::ChoiceModern,
                                           WalkModel::Uniform, WalkModel::UniformVectorized};
    auto text = [&](std::size_t max_len) {
        static const std::string alphabet = "abcXYZ09 _-./\\\"\n\t\xc3\xa9";
        std::string s;
        const auto n = 1 + rng() % max_len;
        for (std::size_t i = 0; i < n; ++i) {
            const char c = alphabet[rng() % (alphabet.size() - 2)];
            s += c;
        }
        if (rng() % 3 == 0) s += "\xc3\xa9";
        return s;
    };
    ResultRecord r;
    const auto n = rng() % 50;
    for (std::uint64_t i = 0; i < n; ++i) r.data.push_back(static_cast<std::int64_t>(rng()));
    r.parameters.count = static_cast<std::int64_t>(rng() % 100000);
    r.parameters.x0 = static_cast<std::int64_t>(rng() % 2000001) - 1000000;
    r.parameters.step = 1 + static_cast<std::int64_t>(rng() % 1000);
    std::vector<std::uint32_t> limbs(rng() % 5);
    for (auto& l : limbs) l = static_cast<std::uint32_t>(rng());
    r.parameters.seed = rng() % 2 ? SeedSpec{SeedScheme::BigIntArray, SeedValue::from_words(limbs)}
                                  : SeedSpec::legacy(rng() & 0xffffffffu);
    r.parameters.model = models[rng() % 4];
    r.timestamp = format_utc_timestamp(std::chrono::system_clock::time_point{std::chrono::microseconds(rng() % 4000000000000000ull)});
    if (rng() % 2) {
        std::string rev;
        for (int i = 0; i < 40; ++i) rev += "0123456789abcdef"[rng() % 16];
        r.revision = rev;
    }
    r.dirty = rng() % 2;
    r.system = {text(12), text(12), text(8), text(10), text(6), text(40)};
    return r;
}

}  // namespace r5::testing
