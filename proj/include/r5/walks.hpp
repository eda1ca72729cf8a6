#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "r5/errors.hpp"
#include "r5/mt19937.hpp"
#include "r5/sampling.hpp"
#include "r5/seed.hpp"

namespace r5 {

enum class WalkModel {
    ChoiceLegacy,       // index = floor(random() * 2) over {-1, +1}
    ChoiceModern,       // index by rejection sampling over {-1, +1}
    Uniform,            // sign of uniform(-1, +1), zero counts as negative
    UniformVectorized,  // Uniform through state transfer and a batch of doubles
};

inline std::string_view to_string(WalkModel model) {
    switch (model) {
        case WalkModel::ChoiceLegacy: return "choice-legacy";
        case WalkModel::ChoiceModern: return "choice-modern";
        case WalkModel::Uniform: return "uniform";
        case WalkModel::UniformVectorized: return "uniform-vectorized";
    }
    return "unknown";
}

inline WalkModel parse_walk_model(std::string_view text) {
    for (auto m : {WalkModel::ChoiceLegacy, WalkModel::ChoiceModern, WalkModel::Uniform,
                   WalkModel::UniformVectorized}) {
        if (text == to_string(m)) return m;
    }
    throw DomainError("unknown walk model: " + std::string(text));
}

/// Full experimental condition of one walk. Defaults: x0 = 0, step = 1, seed 0.
struct WalkParams {
    std::int64_t count = 10;
    std::int64_t x0 = 0;
    std::int64_t step = 1;
    SeedSpec seed{};
    WalkModel model = WalkModel::Uniform;

    /// Throws DomainError on count < 0, step < 1, or a walk whose extreme
    /// positions would leave the int64 range.
    void validate() const {
        if (count < 0) {
            throw DomainError("walk: count must be >= 0, got " + std::to_string(count));
        }
        if (step < 1) {
            throw DomainError("walk: step must be >= 1, got " + std::to_string(step));
        }
        constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
        constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
        if (count > 0 && step > kMax / count) {
            throw DomainError("walk: count * step overflows");
        }
        const std::int64_t reach = count * step;
        if ((x0 > 0 && reach > kMax - x0) || (x0 < 0 && -reach < kMin - x0)) {
            throw DomainError("walk: positions may overflow from x0 = " + std::to_string(x0));
        }
        seed.validate();
    }

    friend bool operator==(const WalkParams&, const WalkParams&) = default;
};

/// Positions after each step; the origin is not included.
struct Walk {
    std::vector<std::int64_t> positions;

    friend bool operator==(const Walk&, const Walk&) = default;
};

/// +1 or -1 for one step of the given model. UniformVectorized draws like
/// Uniform here; the batched route lives in generate_walk_vectorized.
template <Uint32Source G>
int draw_direction(G& gen, WalkModel model) {
    switch (model) {
        case WalkModel::ChoiceLegacy:
            return choice_legacy(gen, 2) == 0 ? -1 : +1;
        case WalkModel::ChoiceModern:
            return choice_modern(gen, 2) == 0 ? -1 : +1;
        case WalkModel::Uniform:
        case WalkModel::UniformVectorized:
            return uniform(gen, -1.0, +1.0) > 0.0 ? +1 : -1;
    }
    throw DomainError("walk: unknown model");
}

/// Walk driven by an already-positioned source.
template <Uint32Source G>
Walk walk_from_source(G& gen, std::int64_t count, std::int64_t x0, std::int64_t step,
                      WalkModel model) {
    Walk out;
    out.positions.reserve(static_cast<std::size_t>(count));
    std::int64_t x = x0;
    for (std::int64_t i = 0; i < count; ++i) {
        x += draw_direction(gen, model) * step;
        out.positions.push_back(x);
    }
    return out;
}

/// Replica route: seed, export the word table, import it into a fresh
/// generator with cursor 624, draw all doubles at once, map signs and take
/// the running sum from x0. Must agree with the Uniform model exactly.
template <class Engine = Mt19937>
Walk generate_walk_vectorized(const WalkParams& params) {
    params.validate();
    if (params.model != WalkModel::UniformVectorized && params.model != WalkModel::Uniform) {
        throw DomainError("walk: vectorized route requires a uniform model");
    }
    const MtState seeded = Engine(params.seed).export_state();
    MtState transferred;
    transferred.words = seeded.words;
    transferred.cursor = kMtWords;
    Engine gen(transferred);

    const auto n = static_cast<std::size_t>(params.count);
    std::vector<double> draws(n);
    for (double& d : draws) {
        d = uniform(gen, -1.0, +1.0);
    }
    std::vector<std::int64_t> steps(n);
    std::transform(draws.begin(), draws.end(), steps.begin(),
                   [step = params.step](double d) { return d > 0.0 ? step : -step; });
    Walk out;
    out.positions.resize(n);
    std::inclusive_scan(steps.begin(), steps.end(), out.positions.begin(), std::plus<>{},
                        params.x0);
    return out;
}

/// Seeds a fresh generator from params.seed and walks params.count steps.
template <class Engine = Mt19937>
Walk generate_walk(const WalkParams& params) {
    params.validate();
    if (params.model == WalkModel::UniformVectorized) {
        return generate_walk_vectorized<Engine>(params);
    }
    Engine gen(params.seed);
    return walk_from_source(gen, params.count, params.x0, params.step, params.model);
}

}  // namespace r5
