#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "gccl/concept_space.hpp"
#include "gccl/context.hpp"
#include "gccl/operators.hpp"

namespace gccl {

// One increment step: new objects carry their intent over M_i united with the
// batch's new attributes; new attributes carry their extent over G_i united
// with the batch's new objects. Either list may be empty.
struct NewObject {
    std::string name;
    Bitset intent;  // width |M_i| + |new attributes|
};

struct NewAttribute {
    std::string name;
    Bitset extent;  // width |G_i| + |new objects|
};

struct IncrementBatch {
    std::vector<NewObject> objects;
    std::vector<NewAttribute> attributes;

    bool empty() const { return objects.empty() && attributes.empty(); }
};

struct BatchRecord {
    std::size_t objects_added = 0;
    std::size_t attributes_added = 0;
    double seconds = 0.0;
    std::chrono::system_clock::time_point applied_at;
};

enum class ExtendMode {
    Incremental,  // intent/extent-intersection maintenance kernels
    Reenumerate,  // reference path: full closure enumeration of the new context
};

// Maintenance kernel for one appended object: the object at index |G|-1 of
// ctx is new, old_space describes the context without it. New intent set =
// old intents united with { I and F(g) }; extents follow.
ConceptSpace incremental_object_insert(const FormalContext& ctx, const ConceptSpace& old_space);

// Dual kernel for one appended attribute (index |M|-1 of ctx).
ConceptSpace incremental_attribute_insert(const FormalContext& ctx, const ConceptSpace& old_space);

// The current (G_i, M_i, incidence, concept space) of a non-decreasing
// sequence of contexts. Single writer; between extends everything is
// immutable and safe to read concurrently.
class LearningState {
public:
    LearningState() : space_(enumerate_concepts(context_)) {}
    explicit LearningState(FormalContext initial, unsigned threads = 1)
        : context_(std::move(initial)), space_(enumerate_concepts(context_, threads)) {}

    // Adopts a precomputed space (persistence path); dimensions and
    // generation must match the context.
    LearningState(FormalContext ctx, ConceptSpace space);

    const FormalContext& context() const { return context_; }
    const ConceptSpace& space() const { return space_; }
    const std::vector<BatchRecord>& history() const { return history_; }

    CognitiveOperators operators() const { return CognitiveOperators(context_); }

    // Validates, then applies attributes first and objects second, updating
    // the concept space after each append. A failed validation leaves the
    // state untouched.
    void extend(const IncrementBatch& batch, ExtendMode mode = ExtendMode::Incremental);

    // Object-only increment (the streaming regime): every intent has width |M_i|.
    void extend_with_objects(const std::vector<NewObject>& rows,
                             ExtendMode mode = ExtendMode::Incremental);

    // Oracle cross-check: the stored space must equal a fresh enumeration.
    bool validate() const;

private:
    void apply(const IncrementBatch& batch, ExtendMode mode);

    FormalContext context_;
    ConceptSpace space_;
    std::vector<BatchRecord> history_;
};

}  // namespace gccl
