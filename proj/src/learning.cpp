#include "gccl/learning.hpp"

#include <cassert>
#include <unordered_set>

namespace gccl {

LearningState::LearningState(FormalContext ctx, ConceptSpace space)
    : context_(std::move(ctx)), space_(std::move(space)) {
    if (space_.object_count() != context_.object_count() ||
        space_.attribute_count() != context_.attribute_count())
        throw Error("concept space dimensions do not match context");
    if (space_.generation() != context_.generation())
        throw Error("concept space generation does not match context");
}

ConceptSpace incremental_object_insert(const FormalContext& ctx, const ConceptSpace& old_space) {
    const std::size_t n_objects = ctx.object_count();
    const std::size_t g = n_objects - 1;
    const Bitset& new_intent = ctx.row(g);
    const std::uint64_t gen = ctx.generation();
    const CognitiveOperators ops(ctx);

    std::vector<Concept> concepts;
    concepts.reserve(old_space.size() + 16);
    std::unordered_set<Bitset, BitsetHash> intents;
    intents.reserve(old_space.size() * 2);

    // Old intents survive; extents gain g exactly when the intent fits the new row.
    for (const auto& c : old_space) {
        Bitset extent = c.extent.bits().resized(n_objects);
        if (c.intent.bits().is_subset_of(new_intent)) extent.set(g);
        intents.insert(c.intent.bits());
        concepts.push_back({{std::move(extent), gen}, {c.intent.bits(), gen}});
    }
    // Intersections with the new row yield the new intents.
    for (const auto& c : old_space) {
        Bitset candidate = c.intent.bits();
        candidate &= new_intent;
        if (!intents.insert(candidate).second) continue;
        concepts.push_back({{ops.raw_extent(candidate), gen}, {std::move(candidate), gen}});
    }
    return ConceptSpace(std::move(concepts), n_objects, ctx.attribute_count(), gen);
}

ConceptSpace incremental_attribute_insert(const FormalContext& ctx, const ConceptSpace& old_space) {
    const std::size_t n_attrs = ctx.attribute_count();
    const std::size_t m = n_attrs - 1;
    const Bitset& new_extent = ctx.column(m);
    const std::uint64_t gen = ctx.generation();
    const CognitiveOperators ops(ctx);

    std::vector<Concept> concepts;
    concepts.reserve(old_space.size() + 16);
    std::unordered_set<Bitset, BitsetHash> extents;
    extents.reserve(old_space.size() * 2);

    for (const auto& c : old_space) {
        Bitset intent = c.intent.bits().resized(n_attrs);
        if (c.extent.bits().is_subset_of(new_extent)) intent.set(m);
        extents.insert(c.extent.bits());
        concepts.push_back({{c.extent.bits(), gen}, {std::move(intent), gen}});
    }
    for (const auto& c : old_space) {
        Bitset candidate = c.extent.bits();
        candidate &= new_extent;
        if (!extents.insert(candidate).second) continue;
        Bitset intent = ops.raw_intent(candidate);
        concepts.push_back({{std::move(candidate), gen}, {std::move(intent), gen}});
    }
    return ConceptSpace(std::move(concepts), ctx.object_count(), n_attrs, gen);
}

namespace {

void validate_batch(const FormalContext& ctx, const IncrementBatch& batch) {
    const std::size_t old_objects = ctx.object_count();
    const std::size_t old_attrs = ctx.attribute_count();
    const std::size_t new_objects = batch.objects.size();
    const std::size_t new_attrs = batch.attributes.size();

    std::unordered_set<std::string> names;
    for (const auto& o : batch.objects) {
        if (ctx.object_index(o.name))
            throw BatchError("object id collides with existing object: " + o.name);
        if (!names.insert(o.name).second) throw BatchError("duplicate object id in batch: " + o.name);
        if (o.intent.size() != old_attrs + new_attrs)
            throw BatchError("object '" + o.name + "' intent width " +
                             std::to_string(o.intent.size()) + " does not match " +
                             std::to_string(old_attrs + new_attrs));
    }
    names.clear();
    for (const auto& a : batch.attributes) {
        if (ctx.attribute_index(a.name))
            throw BatchError("attribute id collides with existing attribute: " + a.name);
        if (!names.insert(a.name).second)
            throw BatchError("duplicate attribute id in batch: " + a.name);
        if (a.extent.size() != old_objects + new_objects)
            throw BatchError("attribute '" + a.name + "' extent width " +
                             std::to_string(a.extent.size()) + " does not match " +
                             std::to_string(old_objects + new_objects));
    }
    // The (new object, new attribute) block is described twice; both views
    // must agree or the extended operators would contradict each other.
    for (std::size_t i = 0; i < new_objects; ++i)
        for (std::size_t j = 0; j < new_attrs; ++j)
            if (batch.objects[i].intent.test(old_attrs + j) !=
                batch.attributes[j].extent.test(old_objects + i))
                throw BatchError("batch incidence mismatch between object '" +
                                 batch.objects[i].name + "' and attribute '" +
                                 batch.attributes[j].name + "'");
}

}  // namespace

void LearningState::extend(const IncrementBatch& batch, ExtendMode mode) {
    if (batch.empty()) return;
    validate_batch(context_, batch);
    const auto t0 = std::chrono::steady_clock::now();
    apply(batch, mode);
    const auto t1 = std::chrono::steady_clock::now();
    history_.push_back({batch.objects.size(), batch.attributes.size(),
                        std::chrono::duration<double>(t1 - t0).count(),
                        std::chrono::system_clock::now()});
    assert(context_.object_count() > 12 || context_.attribute_count() > 12 || validate());
}

void LearningState::apply(const IncrementBatch& batch, ExtendMode mode) {
    const std::size_t old_objects = context_.object_count();

    // Attributes first, so object intents can reference the new columns.
    for (const auto& a : batch.attributes) {
        Bitset extent_now = a.extent.resized(old_objects);
        context_.append_attribute(a.name, extent_now);
        if (mode == ExtendMode::Incremental)
            space_ = incremental_attribute_insert(context_, space_);
    }
    for (const auto& o : batch.objects) {
        context_.append_object(o.name, o.intent);
        if (mode == ExtendMode::Incremental) space_ = incremental_object_insert(context_, space_);
    }
    if (mode == ExtendMode::Reenumerate) space_ = enumerate_concepts(context_);
}

void LearningState::extend_with_objects(const std::vector<NewObject>& rows, ExtendMode mode) {
    IncrementBatch batch;
    batch.objects = rows;
    extend(batch, mode);
}

bool LearningState::validate() const {
    const ConceptSpace reference = enumerate_concepts(context_);
    if (reference.size() != space_.size()) return false;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        if (reference.at(i).extent.bits() != space_.at(i).extent.bits()) return false;
        if (reference.at(i).intent.bits() != space_.at(i).intent.bits()) return false;
    }
    return true;
}

}  // namespace gccl
