#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gccl/bitset.hpp"
#include "gccl/error.hpp"

namespace gccl {

namespace detail {
struct ObjectTag;
struct AttributeTag;
}  // namespace detail

// Bit vector over the objects (or attributes) of one context generation.
// Set algebra is only defined within a single generation; mixing throws.
template <typename Tag>
class TaggedSet {
public:
    TaggedSet() = default;
    TaggedSet(Bitset bits, std::uint64_t generation) : bits_(std::move(bits)), gen_(generation) {}

    const Bitset& bits() const { return bits_; }
    Bitset& mutable_bits() { return bits_; }
    std::uint64_t generation() const { return gen_; }

    std::size_t size() const { return bits_.size(); }
    std::size_t count() const { return bits_.count(); }
    bool test(std::size_t i) const { return bits_.test(i); }
    void set(std::size_t i) { bits_.set(i); }
    void reset(std::size_t i) { bits_.reset(i); }
    bool any() const { return bits_.any(); }
    bool none() const { return bits_.none(); }

    TaggedSet& operator&=(const TaggedSet& o) {
        check_same(o);
        bits_ &= o.bits_;
        return *this;
    }

    TaggedSet& operator|=(const TaggedSet& o) {
        check_same(o);
        bits_ |= o.bits_;
        return *this;
    }

    friend TaggedSet operator&(TaggedSet a, const TaggedSet& b) { return a &= b; }
    friend TaggedSet operator|(TaggedSet a, const TaggedSet& b) { return a |= b; }

    bool is_subset_of(const TaggedSet& o) const {
        check_same(o);
        return bits_.is_subset_of(o.bits_);
    }

    friend bool operator==(const TaggedSet& a, const TaggedSet& b) {
        a.check_same(b);
        return a.bits_ == b.bits_;
    }
    friend bool operator!=(const TaggedSet& a, const TaggedSet& b) { return !(a == b); }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        bits_.for_each(fn);
    }

private:
    void check_same(const TaggedSet& o) const {
        if (gen_ != o.gen_)
            throw GenerationError("set operation across context generations (" +
                                  std::to_string(gen_) + " vs " + std::to_string(o.gen_) + ")");
    }

    Bitset bits_;
    std::uint64_t gen_ = 0;
};

using ObjectSet = TaggedSet<detail::ObjectTag>;
using AttributeSet = TaggedSet<detail::AttributeTag>;

// Finite object set, attribute set and boolean incidence, stored object-major
// (one bit row per object). An attribute-major mirror is kept lazily for
// column reads. Identifiers are opaque strings; appends only, every append
// bumps the generation counter.
class FormalContext {
public:
    FormalContext() = default;
    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                  std::vector<Bitset> rows);

    FormalContext(const FormalContext& o);
    FormalContext& operator=(const FormalContext& o);
    FormalContext(FormalContext&& o) noexcept;
    FormalContext& operator=(FormalContext&& o) noexcept;

    std::size_t object_count() const { return object_names_.size(); }
    std::size_t attribute_count() const { return attribute_names_.size(); }
    std::uint64_t generation() const { return generation_; }

    const std::string& object_name(std::size_t g) const { return object_names_.at(g); }
    const std::string& attribute_name(std::size_t m) const { return attribute_names_.at(m); }
    const std::vector<std::string>& object_names() const { return object_names_; }
    const std::vector<std::string>& attribute_names() const { return attribute_names_; }

    std::optional<std::size_t> object_index(std::string_view name) const;
    std::optional<std::size_t> attribute_index(std::string_view name) const;

    bool incidence(std::size_t g, std::size_t m) const { return rows_.at(g).test(m); }

    // Object-major row, width |M|.
    const Bitset& row(std::size_t g) const { return rows_.at(g); }

    // Attribute-major column, width |G|; rebuilt on demand after appends.
    const Bitset& column(std::size_t m) const;

    AttributeSet object_intent(std::size_t g) const;
    ObjectSet attribute_extent(std::size_t m) const;

    // intent has width |M|; the new object's row.
    void append_object(const std::string& name, const Bitset& intent);
    // extent has width |G|; every existing row grows by one column.
    void append_attribute(const std::string& name, const Bitset& extent);

    ObjectSet empty_object_set() const { return {Bitset(object_count()), generation_}; }
    ObjectSet full_object_set() const { return {Bitset(object_count(), true), generation_}; }
    AttributeSet empty_attribute_set() const { return {Bitset(attribute_count()), generation_}; }
    AttributeSet full_attribute_set() const { return {Bitset(attribute_count(), true), generation_}; }

    ObjectSet object_set(const std::vector<std::string>& names) const;
    AttributeSet attribute_set(const std::vector<std::string>& names) const;

private:
    void rebuild_columns() const;
    void invalidate_columns() { columns_valid_.store(false, std::memory_order_release); }

    std::vector<std::string> object_names_;
    std::vector<std::string> attribute_names_;
    std::unordered_map<std::string, std::size_t> object_index_;
    std::unordered_map<std::string, std::size_t> attribute_index_;
    std::vector<Bitset> rows_;
    std::uint64_t generation_ = 0;

    mutable std::vector<Bitset> columns_;
    mutable std::atomic<bool> columns_valid_{false};
    mutable std::mutex columns_mutex_;
};

// Burmeister-style text layout: `B`, object count, attribute count, one object
// name per line, one attribute name per line, one `X`/`.` row per object.
FormalContext parse_context(std::string_view text);
std::string serialize_context(const FormalContext& ctx);

// One tabular column of a many-valued context: admissible values plus the
// marker standing for a missing cell.
struct MvColumn {
    std::string name;
    std::vector<std::string> domain;
    std::string missing;
};

// Raw tabular data; every cell is validated against its column's domain (or
// equals the missing marker) at insertion.
class ManyValuedContext {
public:
    explicit ManyValuedContext(std::vector<MvColumn> columns);

    void append_row(std::string object_name, const std::vector<std::string>& values);

    std::size_t row_count() const { return cells_.size(); }
    std::size_t column_count() const { return columns_.size(); }
    const MvColumn& column(std::size_t c) const { return columns_.at(c); }
    const std::vector<MvColumn>& columns() const { return columns_; }
    const std::string& object_name(std::size_t r) const { return object_names_.at(r); }
    const std::string& cell(std::size_t r, std::size_t c) const { return cells_.at(r).at(c); }
    bool is_missing(std::size_t r, std::size_t c) const {
        return cells_.at(r).at(c) == columns_.at(c).missing;
    }

private:
    std::vector<MvColumn> columns_;
    std::vector<std::string> object_names_;
    std::vector<std::vector<std::string>> cells_;
};

}  // namespace gccl
