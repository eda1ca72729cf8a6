#include <gtest/gtest.h>

#include <random>

#include "r5/walks.hpp"
#include "generators.hpp"
#include "test_support.hpp"

namespace r5 {
namespace {

using Positions = std::vector<std::int64_t>;

WalkParams params(std::int64_t count, std::int64_t x0, std::int64_t step, SeedSpec seed,
                  WalkModel model) {
    WalkParams p;
    p.count = count;
    p.x0 = x0;
    p.step = step;
    p.seed = std::move(seed);
    p.model = model;
    return p;
}

TEST(GenerateWalk, PublishedVectors) {
    EXPECT_EQ(generate_walk(params(10, 0, 1, SeedSpec::bigint(42), WalkModel::Uniform)).positions,
              (Positions{1, 0, -1, -2, -1, 0, 1, 0, -1, -2}));
    EXPECT_EQ(generate_walk(params(10, 0, 1, SeedSpec::bigint(1), WalkModel::ChoiceModern)).positions,
              (Positions{-1, -2, -1, -2, -1, 0, 1, 2, 1, 0}));
    EXPECT_EQ(generate_walk(params(10, 0, 1, SeedSpec::bigint(1), WalkModel::ChoiceLegacy)).positions,
              (Positions{-1, 0, 1, 0, -1, -2, -1, 0, -1, -2}));
    EXPECT_EQ(generate_walk(params(10, 0, 1, SeedSpec::bigint(439), WalkModel::ChoiceModern)).positions,
              (Positions{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
    EXPECT_EQ(generate_walk(params(10, 0, 1, SeedSpec::bigint(11235813), WalkModel::ChoiceLegacy)).positions,
              (Positions{-1, 0, -1, 0, -1, 0, -1, 0, 1, 2}));
}

TEST(GenerateWalk, TranslatedOrigin) {
    EXPECT_EQ(generate_walk(params(10, 5, 1, SeedSpec::bigint(42), WalkModel::Uniform)).positions,
              (Positions{6, 5, 4, 3, 4, 5, 6, 5, 4, 3}));
}

TEST(GenerateWalk, EmptyWalk) {
    for (auto model : {WalkModel::ChoiceLegacy, WalkModel::ChoiceModern, WalkModel::Uniform,
                       WalkModel::UniformVectorized}) {
        EXPECT_TRUE(generate_walk(params(0, 3, 2, SeedSpec::bigint(9), model)).positions.empty());
    }
}

TEST(GenerateWalk, MatchesOracleUniformWalks) {
    const auto fx = testing::load_fixture("oracleA-uniform-walks.json");
    for (const auto& w : fx.at("walks")) {
        const auto seed = SeedValue::from_decimal(w.at("seed").get<std::string>());
        const auto p = params(w.at("count").get<std::int64_t>(), 0, 1,
                              {SeedScheme::BigIntArray, seed}, WalkModel::Uniform);
        const auto expected = w.at("uniform").get<Positions>();
        EXPECT_EQ(generate_walk(p).positions, expected) << "seed " << w.at("seed");
        EXPECT_EQ(generate_walk_vectorized(p).positions, expected) << "seed " << w.at("seed");
    }
}

TEST(GenerateWalk, RejectsInvalidParams) {
    EXPECT_THROW(generate_walk(params(-1, 0, 1, SeedSpec::bigint(0), WalkModel::Uniform)), DomainError);
    EXPECT_THROW(generate_walk(params(3, 0, 0, SeedSpec::bigint(0), WalkModel::Uniform)), DomainError);
    EXPECT_THROW(generate_walk(params(3, 0, 1, SeedSpec::legacy(1ull << 33), WalkModel::Uniform)),
                 SeedDomainError);
    const auto big = std::numeric_limits<std::int64_t>::max();
    EXPECT_THROW(generate_walk(params(2, big - 1, 1, SeedSpec::bigint(0), WalkModel::Uniform)), DomainError);
    EXPECT_THROW(generate_walk(params(4, 0, big / 2, SeedSpec::bigint(0), WalkModel::Uniform)), DomainError);
    EXPECT_NO_THROW(params(1, big - 1, 1, SeedSpec::bigint(0), WalkModel::Uniform).validate());
}

TEST(GenerateWalk, StepSizeScalesUnitWalk) {
    const auto unit = generate_walk(params(200, 0, 1, SeedSpec::bigint(8), WalkModel::ChoiceModern));
    const auto scaled = generate_walk(params(200, 0, 3, SeedSpec::bigint(8), WalkModel::ChoiceModern));
    for (std::size_t i = 0; i < unit.positions.size(); ++i) {
        ASSERT_EQ(scaled.positions[i], 3 * unit.positions[i]);
    }
}

struct ZeroThenSource {
    // first double is exactly 0.5, so uniform(-1, +1) yields exactly 0
    std::vector<std::uint32_t> words{0x80000000u, 0u, 0xffffffffu, 0xffffffffu};
    std::size_t pos = 0;
    std::uint32_t next_u32() { return words.at(pos++); }
};

TEST(GenerateWalk, ZeroDrawStepsNegative) {
    ZeroThenSource src;
    const Walk w = walk_from_source(src, 2, 0, 1, WalkModel::Uniform);
    EXPECT_EQ(w.positions, (Positions{-1, 0}));
}

TEST(GenerateWalkVectorized, PublishedVectorAndEmpty) {
    EXPECT_EQ(generate_walk_vectorized(params(10, 0, 1, SeedSpec::bigint(42), WalkModel::UniformVectorized))
                  .positions,
              (Positions{1, 0, -1, -2, -1, 0, 1, 0, -1, -2}));
    EXPECT_TRUE(generate_walk_vectorized(params(0, 0, 1, SeedSpec::bigint(5), WalkModel::UniformVectorized))
                    .positions.empty());
    EXPECT_THROW(generate_walk_vectorized(params(3, 0, 1, SeedSpec::bigint(5), WalkModel::ChoiceModern)),
                 DomainError);
}

TEST(GenerateWalkVectorized, EqualsScalarUniform) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto p = params(1000, static_cast<std::int64_t>(seed) - 50, 1 + seed % 3, SeedSpec::bigint(seed),
                        WalkModel::Uniform);
        const auto scalar = generate_walk(p);
        p.model = WalkModel::UniformVectorized;
        ASSERT_EQ(generate_walk(p), scalar) << "seed " << seed;
    }
}

// Transferring array-seeded words into a generator that never saw the seed
// reproduces the uniform walk.
TEST(StateTransfer, ImportedWordsReproduceUniformWalk) {
    MtState transferred;
    transferred.words = Mt19937(SeedSpec::bigint(1)).export_state().words;
    transferred.cursor = 624;
    Mt19937 fresh(SeedSpec::legacy(0));
    fresh.import_state(transferred);
    const Walk via_transfer = walk_from_source(fresh, 10, 0, 1, WalkModel::Uniform);
    EXPECT_EQ(via_transfer, generate_walk(params(10, 0, 1, SeedSpec::bigint(1), WalkModel::Uniform)));
}

TEST(WalkProperties, StepLawAndDeterminism) {
    std::mt19937_64 rng(1650218);
    for (int trial = 0; trial < 10000; ++trial) {
        const WalkParams p = testing::random_params(rng);
        const Walk w = generate_walk(p);
        ASSERT_EQ(static_cast<std::int64_t>(w.positions.size()), p.count);
        std::int64_t prev = p.x0;
        for (auto x : w.positions) {
            ASSERT_EQ(std::abs(x - prev), p.step);
            prev = x;
        }
        ASSERT_EQ(generate_walk(p), w);
    }
}

TEST(WalkProperties, TranslationEquivariance) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        auto p = testing::random_params(rng);
        p.model = WalkModel::Uniform;
        const Walk base = generate_walk(p);
        const std::int64_t d = static_cast<std::int64_t>(rng() % 1001) - 500;
        p.x0 += d;
        const Walk moved = generate_walk(p);
        for (std::size_t i = 0; i < base.positions.size(); ++i) {
            ASSERT_EQ(moved.positions[i], base.positions[i] + d);
        }
    }
}

TEST(WalkModelNames, RoundTrip) {
    for (auto m : {WalkModel::ChoiceLegacy, WalkModel::ChoiceModern, WalkModel::Uniform,
                   WalkModel::UniformVectorized}) {
        EXPECT_EQ(parse_walk_model(to_string(m)), m);
    }
    EXPECT_THROW(parse_walk_model("gaussian"), DomainError);
}

}  // namespace
}  // namespace r5
