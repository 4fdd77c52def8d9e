#pragma once

// Test-only reference machinery. Everything here works directly on the raw
// incidence relation so it stays independent of the operator and enumeration
// code it is used to check. Contexts must be small (<= 20 objects/attributes,
// masks are plain uint32_t).

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "gccl/context.hpp"

namespace gccl::testing {

using Mask = std::uint32_t;

inline Mask oracle_intent(const FormalContext& ctx, Mask objects) {
    Mask intent = (ctx.attribute_count() >= 32) ? ~Mask{0}
                                                : ((Mask{1} << ctx.attribute_count()) - 1);
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        if (!(objects >> g & 1)) continue;
        Mask row = 0;
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
            if (ctx.incidence(g, m)) row |= Mask{1} << m;
        intent &= row;
    }
    return intent;
}

inline Mask oracle_extent(const FormalContext& ctx, Mask attributes) {
    Mask extent = 0;
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        bool all = true;
        for (std::size_t m = 0; m < ctx.attribute_count() && all; ++m)
            if ((attributes >> m & 1) && !ctx.incidence(g, m)) all = false;
        if (all) extent |= Mask{1} << g;
    }
    return extent;
}

// Every concept, by closing every object subset. (extent, intent) pairs,
// deduplicated, unordered.
inline std::set<std::pair<Mask, Mask>> oracle_concepts(const FormalContext& ctx) {
    std::set<std::pair<Mask, Mask>> out;
    const std::size_t n = ctx.object_count();
    for (Mask a = 0; a < (Mask{1} << n); ++a) {
        const Mask intent = oracle_intent(ctx, a);
        out.emplace(oracle_extent(ctx, intent), intent);
        if (n == 0) break;
    }
    return out;
}

inline Mask to_mask(const Bitset& b) {
    Mask m = 0;
    b.for_each([&](std::size_t i) { m |= Mask{1} << i; });
    return m;
}

inline Bitset to_bitset(Mask m, std::size_t width) {
    Bitset b(width);
    for (std::size_t i = 0; i < width; ++i)
        if (m >> i & 1) b.set(i);
    return b;
}

// Random context with the given dimensions; densities vary per context.
inline FormalContext random_context(std::mt19937& rng, std::size_t max_objects,
                                    std::size_t max_attributes) {
    std::uniform_int_distribution<std::size_t> od(0, max_objects);
    std::uniform_int_distribution<std::size_t> ad(0, max_attributes);
    const std::size_t n_objects = od(rng);
    const std::size_t n_attrs = ad(rng);
    std::uniform_real_distribution<double> density_dist(0.1, 0.9);
    const double density = density_dist(rng);
    std::bernoulli_distribution bit(density);

    std::vector<std::string> objects, attributes;
    for (std::size_t g = 0; g < n_objects; ++g) objects.push_back("g" + std::to_string(g));
    for (std::size_t m = 0; m < n_attrs; ++m) attributes.push_back("m" + std::to_string(m));
    std::vector<Bitset> rows(n_objects, Bitset(n_attrs));
    for (auto& row : rows)
        for (std::size_t m = 0; m < n_attrs; ++m)
            if (bit(rng)) row.set(m);
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

// The worked 3x3 example used across the unit tests:
//   g1 = {a, b}, g2 = {b, c}, g3 = {a, b, c}.
inline FormalContext k1() {
    return FormalContext({"g1", "g2", "g3"}, {"a", "b", "c"},
                         {Bitset::from_string("110"), Bitset::from_string("011"),
                          Bitset::from_string("111")});
}

// k1 without g3.
inline FormalContext k0() {
    return FormalContext({"g1", "g2"}, {"a", "b", "c"},
                         {Bitset::from_string("110"), Bitset::from_string("011")});
}

}  // namespace gccl::testing
