#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "r5/compare.hpp"
#include "r5/mt19937.hpp"
#include "r5/walks.hpp"

namespace r5 {

struct SelfTestEntry {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelfTestReport {
    std::vector<SelfTestEntry> entries;

    bool passed() const {
        return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed; });
    }

    const SelfTestEntry* first_failure() const {
        for (const auto& e : entries) {
            if (!e.passed) return &e;
        }
        return nullptr;
    }
};

struct GoldenWalk {
    const char* name;
    std::uint64_t seed;
    WalkModel model;
    std::vector<std::int64_t> expected;
};

/// Published ten-step walks (x0 = 0, step = 1, array-seeded).
inline const std::vector<GoldenWalk>& golden_walks() {
    static const std::vector<GoldenWalk> walks = {
        {"seed42-uniform", 42, WalkModel::Uniform, {1, 0, -1, -2, -1, 0, 1, 0, -1, -2}},
        {"seed42-uniform-vectorized", 42, WalkModel::UniformVectorized, {1, 0, -1, -2, -1, 0, 1, 0, -1, -2}},
        {"seed1-choice-legacy", 1, WalkModel::ChoiceLegacy, {-1, 0, 1, 0, -1, -2, -1, 0, -1, -2}},
        {"seed1-choice-modern", 1, WalkModel::ChoiceModern, {-1, -2, -1, -2, -1, 0, 1, 2, 1, 0}},
        {"seed439-choice-modern", 439, WalkModel::ChoiceModern, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}},
        {"seed11235813-choice-legacy", 11235813, WalkModel::ChoiceLegacy, {-1, 0, -1, 0, -1, 0, -1, 0, 1, 2}},
    };
    return walks;
}

/// Runs the embedded golden assertions on the given engine. Never throws
/// for a failed vector; failures are entries in the report.
template <class Engine = Mt19937>
SelfTestReport self_test() {
    SelfTestReport report;
    for (const auto& g : golden_walks()) {
        WalkParams params;
        params.count = static_cast<std::int64_t>(g.expected.size());
        params.seed = SeedSpec::bigint(g.seed);
        params.model = g.model;
        SelfTestEntry entry{g.name, false, {}};
        try {
            const Walk got = generate_walk<Engine>(params);
            entry.passed = got.positions == g.expected;
            if (!entry.passed) {
                entry.detail = "expected " + detail::int_list(g.expected) + ", got " +
                               detail::int_list(got.positions);
            }
        } catch (const std::exception& e) {
            entry.detail = e.what();
        }
        report.entries.push_back(std::move(entry));
    }

    // Scalar and replica routes must agree beyond the published ten steps.
    SelfTestEntry equiv{"vectorized-equivalence", true, {}};
    for (std::uint64_t seed : {0u, 1u, 7u, 439u}) {
        WalkParams params;
        params.count = 1000;
        params.seed = SeedSpec::bigint(seed);
        params.model = WalkModel::Uniform;
        const Walk scalar = generate_walk<Engine>(params);
        const Walk vectorized = generate_walk_vectorized<Engine>(params);
        if (scalar != vectorized) {
            equiv.passed = false;
            equiv.detail = "seed " + std::to_string(seed) + ": routes disagree";
            break;
        }
    }
    report.entries.push_back(std::move(equiv));
    return report;
}

inline std::string format_self_test(const SelfTestReport& report) {
    std::string out;
    for (const auto& e : report.entries) {
        out += (e.passed ? "PASS " : "FAIL ") + e.name;
        if (!e.detail.empty()) out += "  (" + e.detail + ")";
        out += '\n';
    }
    if (const auto* f = report.first_failure()) {
        out += "self-test failed: first failing vector " + f->name + '\n';
    } else {
        out += "self-test passed: " + std::to_string(report.entries.size()) + " vectors\n";
    }
    return out;
}

}  // namespace r5
