#pragma once

#include "gccl/context.hpp"

namespace gccl {

// The classical cognitive operator pair over one context generation: the
// object-attribute map (common attributes of an object set) and the
// attribute-object map (objects possessing every attribute of a set).
// Conventions: intent(empty) = M, extent(empty) = G. Any append to the
// underlying context invalidates the pair.
class CognitiveOperators {
public:
    explicit CognitiveOperators(const FormalContext& ctx)
        : ctx_(&ctx), generation_(ctx.generation()) {}

    const FormalContext& context() const { return *ctx_; }
    std::uint64_t generation() const { return generation_; }

    // F: common attributes of all objects in A.
    AttributeSet intent(const ObjectSet& objects) const;

    // H: objects whose intent contains every attribute in B.
    ObjectSet extent(const AttributeSet& attributes) const;

    // H(F(A)) and F(H(B)).
    ObjectSet extent_closure(const ObjectSet& objects) const;
    AttributeSet intent_closure(const AttributeSet& attributes) const;

    bool is_concept(const ObjectSet& extent_candidate, const AttributeSet& intent_candidate) const;

    // Untagged kernels for enumeration and maintenance code.
    Bitset raw_intent(const Bitset& objects) const;
    Bitset raw_extent(const Bitset& attributes) const;

private:
    void check_current() const;
    void check_generation(std::uint64_t set_generation) const;

    const FormalContext* ctx_;
    std::uint64_t generation_;
};

}  // namespace gccl
