#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "gccl/context.hpp"
#include "gccl/operators.hpp"

namespace gccl {

// An (extent, intent) pair closed under both cognitive operators.
struct Concept {
    ObjectSet extent;
    AttributeSet intent;

    friend bool operator==(const Concept& a, const Concept& b) {
        return a.extent == b.extent && a.intent == b.intent;
    }
};

// extent(a) subseteq extent(b); the lattice order.
bool leq(const Concept& a, const Concept& b);

// All cognitive concepts of one context generation, kept in canonical order
// (ascending intent bit pattern, attribute 0 first) and indexed by intent.
class ConceptSpace {
public:
    ConceptSpace() = default;

    // Sorts, indexes and rejects duplicate intents.
    ConceptSpace(std::vector<Concept> concepts, std::size_t object_count,
                 std::size_t attribute_count, std::uint64_t generation);

    std::size_t size() const { return concepts_.size(); }
    const Concept& at(std::size_t i) const { return concepts_.at(i); }
    const std::vector<Concept>& concepts() const { return concepts_; }
    auto begin() const { return concepts_.begin(); }
    auto end() const { return concepts_.end(); }

    std::size_t object_count() const { return object_count_; }
    std::size_t attribute_count() const { return attribute_count_; }
    std::uint64_t generation() const { return generation_; }

    const Concept* find_by_intent(const Bitset& intent) const;
    bool contains_intent(const Bitset& intent) const { return find_by_intent(intent) != nullptr; }

    // (G, F(G)) and (H(M), M).
    const Concept& top() const;
    const Concept& bottom() const;

private:
    std::vector<Concept> concepts_;
    std::unordered_map<Bitset, std::size_t, BitsetHash> intent_index_;
    std::size_t object_count_ = 0;
    std::size_t attribute_count_ = 0;
    std::uint64_t generation_ = 0;
};

// Canonical closure enumeration (Close-by-One over attributes in ascending
// order with a prefix canonicity test); every concept is produced exactly
// once. threads > 1 splits the top-level search subtrees across a pool; the
// result is identical regardless of thread count.
ConceptSpace enumerate_concepts(const FormalContext& ctx, unsigned threads = 1);

// { (HF(g), F(g)) : g in G } united with { (H(m), FH(m)) : m in M }, deduplicated.
std::vector<Concept> granular_concepts(const FormalContext& ctx);

// (A1 and A2, F(A1 and A2)) / (H(B1 and B2), B1 and B2).
Concept meet(const CognitiveOperators& ops, const Concept& a, const Concept& b);
Concept join(const CognitiveOperators& ops, const Concept& a, const Concept& b);

// Canonical text form: header `CS <|G|> <|M|> <count>`, then one line per
// concept: extent bits, space, intent bits.
std::string serialize_space(const ConceptSpace& space);
ConceptSpace parse_space(std::string_view text, std::uint64_t generation);

}  // namespace gccl
