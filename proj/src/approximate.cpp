#include "gccl/approximate.hpp"

namespace gccl {

namespace {

void check_space(const ConceptSpace& space, const CognitiveOperators& ops) {
    if (space.generation() != ops.generation())
        throw GenerationError("concept space generation " + std::to_string(space.generation()) +
                              " does not match operators at " + std::to_string(ops.generation()));
}

}  // namespace

ApproximationResult learn_from_objects(const ConceptSpace& space, const CognitiveOperators& ops,
                                       const ObjectSet& objects) {
    check_space(space, ops);
    const FormalContext& ctx = ops.context();
    const std::uint64_t gen = ops.generation();
    if (objects.generation() != gen)
        throw GenerationError("object clue generation does not match queried space");

    Bitset intent = ops.raw_intent(objects.bits());
    Bitset closed = ops.raw_extent(intent);
    if (closed == objects.bits()) {
        ApproximationResult r;
        r.exact = Concept{{std::move(closed), gen}, {std::move(intent), gen}};
        return r;
    }

    ApproximationResult r;
    r.upper = Concept{{std::move(closed), gen}, {std::move(intent), gen}};

    // Join of the object-granular concepts contained in the clue; kept only
    // when its extent stays inside the clue (then it is the greatest concept
    // below A). With no contained granular concept, the bottom stands in when
    // the empty extent is closed.
    Bitset joined_intent(ctx.attribute_count(), true);
    bool found = false;
    objects.for_each([&](std::size_t g) {
        const Bitset& row = ctx.row(g);
        if (ops.raw_extent(row).is_subset_of(objects.bits())) {
            joined_intent &= row;
            found = true;
        }
    });
    if (found) {
        // joined_intent is an intersection of closed intents, hence closed.
        Bitset lower_extent = ops.raw_extent(joined_intent);
        if (lower_extent.is_subset_of(objects.bits()))
            r.lower = Concept{{std::move(lower_extent), gen}, {std::move(joined_intent), gen}};
    } else {
        Bitset all_attrs(ctx.attribute_count(), true);
        Bitset bottom_extent = ops.raw_extent(all_attrs);
        if (bottom_extent.none())
            r.lower = Concept{{std::move(bottom_extent), gen}, {std::move(all_attrs), gen}};
    }
    return r;
}

ApproximationResult learn_from_attributes(const ConceptSpace& space, const CognitiveOperators& ops,
                                          const AttributeSet& attributes) {
    check_space(space, ops);
    const FormalContext& ctx = ops.context();
    const std::uint64_t gen = ops.generation();
    if (attributes.generation() != gen)
        throw GenerationError("attribute clue generation does not match queried space");

    Bitset extent = ops.raw_extent(attributes.bits());
    Bitset closed = ops.raw_intent(extent);
    if (closed == attributes.bits()) {
        ApproximationResult r;
        r.exact = Concept{{std::move(extent), gen}, {std::move(closed), gen}};
        return r;
    }

    ApproximationResult r;
    r.upper = Concept{{std::move(extent), gen}, {std::move(closed), gen}};

    Bitset joined_extent(ctx.object_count(), true);
    bool found = false;
    attributes.for_each([&](std::size_t m) {
        const Bitset& col = ctx.column(m);
        if (ops.raw_intent(col).is_subset_of(attributes.bits())) {
            joined_extent &= col;
            found = true;
        }
    });
    if (found) {
        Bitset lower_intent = ops.raw_intent(joined_extent);
        if (lower_intent.is_subset_of(attributes.bits()))
            r.lower = Concept{{std::move(joined_extent), gen}, {std::move(lower_intent), gen}};
    } else {
        Bitset all_objects(ctx.object_count(), true);
        Bitset top_intent = ops.raw_intent(all_objects);
        if (top_intent.none())
            r.lower = Concept{{std::move(all_objects), gen}, {std::move(top_intent), gen}};
    }
    return r;
}

ApproximationResult learn_from_pair(const ConceptSpace& space, const CognitiveOperators& ops,
                                    const ObjectSet& objects, const AttributeSet& attributes) {
    check_space(space, ops);
    const std::uint64_t gen = ops.generation();
    if (objects.generation() != gen || attributes.generation() != gen)
        throw GenerationError("pair clue generation does not match queried space");

    if (ops.is_concept(objects, attributes)) {
        ApproximationResult r;
        r.exact = Concept{objects, attributes};
        return r;
    }

    const ApproximationResult from_objects = learn_from_objects(space, ops, objects);
    const ApproximationResult from_attributes = learn_from_attributes(space, ops, attributes);
    const auto side_upper = [](const ApproximationResult& s) { return s.exact ? s.exact : s.upper; };
    const auto side_lower = [](const ApproximationResult& s) { return s.exact ? s.exact : s.lower; };

    ApproximationResult r;
    r.upper = meet(ops, *side_upper(from_objects), *side_upper(from_attributes));
    const auto lower_o = side_lower(from_objects);
    const auto lower_a = side_lower(from_attributes);
    if (lower_o && lower_a)
        r.lower = join(ops, *lower_o, *lower_a);
    else if (lower_o)
        r.lower = lower_o;
    else if (lower_a)
        r.lower = lower_a;
    return r;
}

ApproximationResult learn(const ConceptSpace& space, const CognitiveOperators& ops,
                          const ConceptClue& clue) {
    return std::visit(
        [&](const auto& c) -> ApproximationResult {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, ObjectClue>)
                return learn_from_objects(space, ops, c.objects);
            else if constexpr (std::is_same_v<T, AttributeClue>)
                return learn_from_attributes(space, ops, c.attributes);
            else
                return learn_from_pair(space, ops, c.objects, c.attributes);
        },
        clue);
}

}  // namespace gccl
