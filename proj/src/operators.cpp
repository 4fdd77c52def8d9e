#include "gccl/operators.hpp"

namespace gccl {

void CognitiveOperators::check_current() const {
    if (ctx_->generation() != generation_)
        throw GenerationError("stale operator pair: bound to generation " +
                              std::to_string(generation_) + ", context is at " +
                              std::to_string(ctx_->generation()));
}

void CognitiveOperators::check_generation(std::uint64_t set_generation) const {
    check_current();
    if (set_generation != generation_)
        throw GenerationError("set of generation " + std::to_string(set_generation) +
                              " used with operators of generation " + std::to_string(generation_));
}

Bitset CognitiveOperators::raw_intent(const Bitset& objects) const {
    Bitset result(ctx_->attribute_count(), true);
    objects.for_each([&](std::size_t g) { result &= ctx_->row(g); });
    return result;
}

Bitset CognitiveOperators::raw_extent(const Bitset& attributes) const {
    Bitset result(ctx_->object_count(), true);
    attributes.for_each([&](std::size_t m) { result &= ctx_->column(m); });
    return result;
}

AttributeSet CognitiveOperators::intent(const ObjectSet& objects) const {
    check_generation(objects.generation());
    return {raw_intent(objects.bits()), generation_};
}

ObjectSet CognitiveOperators::extent(const AttributeSet& attributes) const {
    check_generation(attributes.generation());
    return {raw_extent(attributes.bits()), generation_};
}

ObjectSet CognitiveOperators::extent_closure(const ObjectSet& objects) const {
    check_generation(objects.generation());
    return {raw_extent(raw_intent(objects.bits())), generation_};
}

AttributeSet CognitiveOperators::intent_closure(const AttributeSet& attributes) const {
    check_generation(attributes.generation());
    return {raw_intent(raw_extent(attributes.bits())), generation_};
}

bool CognitiveOperators::is_concept(const ObjectSet& extent_candidate,
                                    const AttributeSet& intent_candidate) const {
    check_generation(extent_candidate.generation());
    check_generation(intent_candidate.generation());
    return raw_intent(extent_candidate.bits()) == intent_candidate.bits() &&
           raw_extent(intent_candidate.bits()) == extent_candidate.bits();
}

}  // namespace gccl
