#pragma once

#include <optional>
#include <variant>

#include "gccl/concept_space.hpp"

namespace gccl {

struct ObjectClue {
    ObjectSet objects;
};
struct AttributeClue {
    AttributeSet attributes;
};
struct PairClue {
    ObjectSet objects;
    AttributeSet attributes;
};

using ConceptClue = std::variant<ObjectClue, AttributeClue, PairClue>;

// Either the one concept the clue denotes exactly, or the two concepts
// bracketing it. The lower bracket may be absent: no concept fits inside the
// clue, or no single greatest one exists.
struct ApproximationResult {
    std::optional<Concept> exact;
    std::optional<Concept> upper;
    std::optional<Concept> lower;

    bool is_exact() const { return exact.has_value(); }
};

// Exact iff HF(A) = A; otherwise upper = (HF(A), F(A)), the least concept
// whose extent contains A, and lower = the greatest concept whose extent is
// contained in A, when that greatest concept exists.
ApproximationResult learn_from_objects(const ConceptSpace& space, const CognitiveOperators& ops,
                                       const ObjectSet& objects);

// Dual by intent inclusion: exact iff FH(B) = B; upper = (H(B), FH(B)) has
// the least intent containing B, lower the greatest intent inside B.
ApproximationResult learn_from_attributes(const ConceptSpace& space, const CognitiveOperators& ops,
                                          const AttributeSet& attributes);

// Exact iff (A, B) is a concept; otherwise upper = meet of the single-clue
// uppers and lower = join of the single-clue lowers (absent sides skipped).
ApproximationResult learn_from_pair(const ConceptSpace& space, const CognitiveOperators& ops,
                                    const ObjectSet& objects, const AttributeSet& attributes);

ApproximationResult learn(const ConceptSpace& space, const CognitiveOperators& ops,
                          const ConceptClue& clue);

}  // namespace gccl
