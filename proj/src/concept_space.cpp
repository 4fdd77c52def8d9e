#include "gccl/concept_space.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <sstream>
#include <thread>

namespace gccl {

bool leq(const Concept& a, const Concept& b) { return a.extent.is_subset_of(b.extent); }

ConceptSpace::ConceptSpace(std::vector<Concept> concepts, std::size_t object_count,
                           std::size_t attribute_count, std::uint64_t generation)
    : concepts_(std::move(concepts)),
      object_count_(object_count),
      attribute_count_(attribute_count),
      generation_(generation) {
    std::sort(concepts_.begin(), concepts_.end(),
              [](const Concept& a, const Concept& b) { return a.intent.bits().lex_less(b.intent.bits()); });
    intent_index_.reserve(concepts_.size());
    for (std::size_t i = 0; i < concepts_.size(); ++i) {
        if (!intent_index_.emplace(concepts_[i].intent.bits(), i).second)
            throw Error("duplicate intent in concept space");
    }
}

const Concept* ConceptSpace::find_by_intent(const Bitset& intent) const {
    const auto it = intent_index_.find(intent);
    if (it == intent_index_.end()) return nullptr;
    return &concepts_[it->second];
}

const Concept& ConceptSpace::top() const {
    for (const auto& c : concepts_)
        if (c.extent.count() == object_count_) return c;
    throw Error("concept space has no top concept");
}

const Concept& ConceptSpace::bottom() const {
    for (const auto& c : concepts_)
        if (c.intent.count() == attribute_count_) return c;
    throw Error("concept space has no bottom concept");
}

namespace {

// One Close-by-One subtree. extent/intent form a concept; attributes below
// `start` are fixed. Emits into `out`.
void cbo_subtree(const FormalContext& ctx, const Bitset& extent, const Bitset& intent,
                 std::size_t start, std::vector<Concept>& out) {
    out.push_back({{extent, ctx.generation()}, {intent, ctx.generation()}});
    const std::size_t n_attrs = ctx.attribute_count();
    for (std::size_t j = start; j < n_attrs; ++j) {
        if (intent.test(j)) continue;
        Bitset child_extent = extent;
        child_extent &= ctx.column(j);
        Bitset child_intent(n_attrs, true);
        child_extent.for_each([&](std::size_t g) { child_intent &= ctx.row(g); });
        // Canonicity: the closure must not add attributes before j.
        if (child_intent.prefix_equal(intent, j)) cbo_subtree(ctx, child_extent, child_intent, j + 1, out);
    }
}

struct Subtree {
    Bitset extent;
    Bitset intent;
    std::size_t start;
};

}  // namespace

ConceptSpace enumerate_concepts(const FormalContext& ctx, unsigned threads) {
    const std::size_t n_attrs = ctx.attribute_count();
    Bitset root_extent(ctx.object_count(), true);
    Bitset root_intent(n_attrs, true);
    root_extent.for_each([&](std::size_t g) { root_intent &= ctx.row(g); });

    std::vector<Concept> concepts;
    if (threads <= 1) {
        cbo_subtree(ctx, root_extent, root_intent, 0, concepts);
    } else {
        // Collect the canonical children of the root, then farm the subtrees out.
        concepts.push_back({{root_extent, ctx.generation()}, {root_intent, ctx.generation()}});
        std::vector<Subtree> tasks;
        for (std::size_t j = 0; j < n_attrs; ++j) {
            if (root_intent.test(j)) continue;
            Bitset child_extent = root_extent;
            child_extent &= ctx.column(j);
            Bitset child_intent(n_attrs, true);
            child_extent.for_each([&](std::size_t g) { child_intent &= ctx.row(g); });
            if (child_intent.prefix_equal(root_intent, j))
                tasks.push_back({std::move(child_extent), std::move(child_intent), j + 1});
        }
        std::atomic<std::size_t> next{0};
        std::vector<std::vector<Concept>> partial(threads);
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) break;
                    cbo_subtree(ctx, tasks[i].extent, tasks[i].intent, tasks[i].start, partial[t]);
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& part : partial)
            concepts.insert(concepts.end(), std::make_move_iterator(part.begin()),
                            std::make_move_iterator(part.end()));
    }

    [[maybe_unused]] const std::size_t bound_dim =
        std::min(ctx.object_count(), ctx.attribute_count());
    assert(bound_dim >= 63 || concepts.size() <= (std::size_t{1} << bound_dim));
    return ConceptSpace(std::move(concepts), ctx.object_count(), ctx.attribute_count(),
                        ctx.generation());
}

std::vector<Concept> granular_concepts(const FormalContext& ctx) {
    const CognitiveOperators ops(ctx);
    std::vector<Concept> out;
    std::unordered_map<Bitset, bool, BitsetHash> seen;
    const auto add = [&](Bitset extent, Bitset intent) {
        if (seen.emplace(intent, true).second)
            out.push_back({{std::move(extent), ctx.generation()}, {std::move(intent), ctx.generation()}});
    };
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        Bitset intent = ctx.row(g);
        add(ops.raw_extent(intent), std::move(intent));
    }
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
        Bitset extent = ctx.column(m);
        add(extent, ops.raw_intent(extent));
    }
    return out;
}

Concept meet(const CognitiveOperators& ops, const Concept& a, const Concept& b) {
    ObjectSet extent = a.extent & b.extent;
    AttributeSet intent = ops.intent(extent);
    return {std::move(extent), std::move(intent)};
}

Concept join(const CognitiveOperators& ops, const Concept& a, const Concept& b) {
    AttributeSet intent = a.intent & b.intent;
    ObjectSet extent = ops.extent(intent);
    return {std::move(extent), std::move(intent)};
}

std::string serialize_space(const ConceptSpace& space) {
    std::ostringstream out;
    out << "CS " << space.object_count() << " " << space.attribute_count() << " " << space.size()
        << "\n";
    for (const auto& c : space)
        out << c.extent.bits().to_string() << " " << c.intent.bits().to_string() << "\n";
    return out.str();
}

ConceptSpace parse_space(std::string_view text, std::uint64_t generation) {
    std::istringstream in{std::string(text)};
    std::string tag;
    std::size_t n_objects = 0, n_attrs = 0, count = 0;
    if (!(in >> tag >> n_objects >> n_attrs >> count) || tag != "CS")
        throw ParseError("malformed concept space header", 1);
    in.ignore();
    std::vector<Concept> concepts;
    concepts.reserve(count);
    std::string line;
    for (std::size_t i = 0; i < count; ++i) {
        if (!std::getline(in, line)) throw ParseError("truncated concept space", i + 2);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        const std::size_t sep = n_objects;  // extent is exactly |G| characters
        if (line.size() != n_objects + 1 + n_attrs || line[sep] != ' ')
            throw ParseError("malformed concept line", i + 2);
        for (char ch : line)
            if (ch != '0' && ch != '1' && ch != ' ') throw ParseError("malformed concept line", i + 2);
        concepts.push_back({{Bitset::from_string(line.substr(0, sep)), generation},
                            {Bitset::from_string(line.substr(sep + 1)), generation}});
    }
    return ConceptSpace(std::move(concepts), n_objects, n_attrs, generation);
}

}  // namespace gccl
