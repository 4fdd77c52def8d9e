#include "gccl/context.hpp"

#include <algorithm>
#include <sstream>

namespace gccl {

namespace {

std::string_view rstrip(std::string_view s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Splits into lines, tolerating \r\n and a missing final newline.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size()) lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::size_t parse_count(std::string_view token, std::size_t line_no, const char* what) {
    const auto s = rstrip(token);
    if (s.empty()) throw ParseError(std::string("missing ") + what, line_no);
    std::size_t value = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError(std::string("malformed ") + what, line_no);
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             std::vector<Bitset> rows)
    : object_names_(std::move(objects)), attribute_names_(std::move(attributes)), rows_(std::move(rows)) {
    if (rows_.size() != object_names_.size())
        throw Error("incidence row count does not match object count");
    for (const auto& r : rows_)
        if (r.size() != attribute_names_.size())
            throw Error("incidence row width does not match attribute count");
    for (std::size_t g = 0; g < object_names_.size(); ++g)
        if (!object_index_.emplace(object_names_[g], g).second)
            throw Error("duplicate object identifier: " + object_names_[g]);
    for (std::size_t m = 0; m < attribute_names_.size(); ++m)
        if (!attribute_index_.emplace(attribute_names_[m], m).second)
            throw Error("duplicate attribute identifier: " + attribute_names_[m]);
}

FormalContext::FormalContext(const FormalContext& o)
    : object_names_(o.object_names_),
      attribute_names_(o.attribute_names_),
      object_index_(o.object_index_),
      attribute_index_(o.attribute_index_),
      rows_(o.rows_),
      generation_(o.generation_) {}

FormalContext& FormalContext::operator=(const FormalContext& o) {
    if (this != &o) {
        object_names_ = o.object_names_;
        attribute_names_ = o.attribute_names_;
        object_index_ = o.object_index_;
        attribute_index_ = o.attribute_index_;
        rows_ = o.rows_;
        generation_ = o.generation_;
        columns_.clear();
        invalidate_columns();
    }
    return *this;
}

FormalContext::FormalContext(FormalContext&& o) noexcept
    : object_names_(std::move(o.object_names_)),
      attribute_names_(std::move(o.attribute_names_)),
      object_index_(std::move(o.object_index_)),
      attribute_index_(std::move(o.attribute_index_)),
      rows_(std::move(o.rows_)),
      generation_(o.generation_) {}

FormalContext& FormalContext::operator=(FormalContext&& o) noexcept {
    if (this != &o) {
        object_names_ = std::move(o.object_names_);
        attribute_names_ = std::move(o.attribute_names_);
        object_index_ = std::move(o.object_index_);
        attribute_index_ = std::move(o.attribute_index_);
        rows_ = std::move(o.rows_);
        generation_ = o.generation_;
        columns_.clear();
        invalidate_columns();
    }
    return *this;
}

std::optional<std::size_t> FormalContext::object_index(std::string_view name) const {
    const auto it = object_index_.find(std::string(name));
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> FormalContext::attribute_index(std::string_view name) const {
    const auto it = attribute_index_.find(std::string(name));
    if (it == attribute_index_.end()) return std::nullopt;
    return it->second;
}

const Bitset& FormalContext::column(std::size_t m) const {
    if (!columns_valid_.load(std::memory_order_acquire)) rebuild_columns();
    return columns_.at(m);
}

void FormalContext::rebuild_columns() const {
    std::lock_guard<std::mutex> lock(columns_mutex_);
    if (columns_valid_.load(std::memory_order_relaxed)) return;
    columns_.assign(attribute_count(), Bitset(object_count()));
    for (std::size_t g = 0; g < rows_.size(); ++g)
        rows_[g].for_each([&](std::size_t m) { columns_[m].set(g); });
    columns_valid_.store(true, std::memory_order_release);
}

AttributeSet FormalContext::object_intent(std::size_t g) const {
    if (g >= object_count())
        throw std::out_of_range("object index " + std::to_string(g) + " out of range");
    return {rows_[g], generation_};
}

ObjectSet FormalContext::attribute_extent(std::size_t m) const {
    if (m >= attribute_count())
        throw std::out_of_range("attribute index " + std::to_string(m) + " out of range");
    return {column(m), generation_};
}

void FormalContext::append_object(const std::string& name, const Bitset& intent) {
    if (intent.size() != attribute_count())
        throw Error("object intent width " + std::to_string(intent.size()) +
                    " does not match attribute count " + std::to_string(attribute_count()));
    if (!object_index_.emplace(name, object_names_.size()).second)
        throw Error("duplicate object identifier: " + name);
    object_names_.push_back(name);
    rows_.push_back(intent);
    if (columns_valid_.load(std::memory_order_acquire)) {
        const std::size_t g = object_count() - 1;
        for (auto& col : columns_) col.resize(object_count());
        intent.for_each([&](std::size_t m) { columns_[m].set(g); });
    }
    ++generation_;
}

void FormalContext::append_attribute(const std::string& name, const Bitset& extent) {
    if (extent.size() != object_count())
        throw Error("attribute extent width " + std::to_string(extent.size()) +
                    " does not match object count " + std::to_string(object_count()));
    if (!attribute_index_.emplace(name, attribute_names_.size()).second)
        throw Error("duplicate attribute identifier: " + name);
    attribute_names_.push_back(name);
    const std::size_t m = attribute_count() - 1;
    for (std::size_t g = 0; g < rows_.size(); ++g) {
        rows_[g].resize(attribute_count());
        if (extent.test(g)) rows_[g].set(m);
    }
    if (columns_valid_.load(std::memory_order_acquire)) columns_.push_back(extent);
    ++generation_;
}

ObjectSet FormalContext::object_set(const std::vector<std::string>& names) const {
    ObjectSet s = empty_object_set();
    for (const auto& n : names) {
        const auto idx = object_index(n);
        if (!idx) throw Error("unknown object: " + n);
        s.set(*idx);
    }
    return s;
}

AttributeSet FormalContext::attribute_set(const std::vector<std::string>& names) const {
    AttributeSet s = empty_attribute_set();
    for (const auto& n : names) {
        const auto idx = attribute_index(n);
        if (!idx) throw Error("unknown attribute: " + n);
        s.set(*idx);
    }
    return s;
}

FormalContext parse_context(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError("empty context file", 1);
    if (rstrip(lines[0]) != "B") throw ParseError("expected header 'B'", 1);
    if (lines.size() < 3) throw ParseError("missing object/attribute counts", lines.size());
    const std::size_t n_objects = parse_count(lines[1], 2, "object count");
    const std::size_t n_attributes = parse_count(lines[2], 3, "attribute count");

    const std::size_t expected = 3 + n_objects + n_attributes + n_objects;
    if (lines.size() < expected) {
        // Find the first missing line for the diagnostic.
        throw ParseError("truncated context file: expected " + std::to_string(expected) +
                             " lines, got " + std::to_string(lines.size()),
                         lines.size());
    }
    for (std::size_t i = expected; i < lines.size(); ++i)
        if (!rstrip(lines[i]).empty())
            throw ParseError("unexpected trailing content", i + 1);

    std::vector<std::string> objects;
    objects.reserve(n_objects);
    for (std::size_t g = 0; g < n_objects; ++g)
        objects.emplace_back(rstrip(lines[3 + g]));
    std::vector<std::string> attributes;
    attributes.reserve(n_attributes);
    for (std::size_t m = 0; m < n_attributes; ++m)
        attributes.emplace_back(rstrip(lines[3 + n_objects + m]));

    std::vector<Bitset> rows;
    rows.reserve(n_objects);
    const std::size_t row_base = 3 + n_objects + n_attributes;
    for (std::size_t g = 0; g < n_objects; ++g) {
        const auto line = rstrip(lines[row_base + g]);
        if (line.size() != n_attributes)
            throw ParseError("incidence row has " + std::to_string(line.size()) +
                                 " entries, expected " + std::to_string(n_attributes),
                             row_base + g + 1);
        Bitset row(n_attributes);
        for (std::size_t m = 0; m < n_attributes; ++m) {
            if (line[m] == 'X')
                row.set(m);
            else if (line[m] != '.')
                throw ParseError(std::string("illegal incidence character '") + line[m] + "'",
                                 row_base + g + 1);
        }
        rows.push_back(std::move(row));
    }

    try {
        return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
    } catch (const Error& e) {
        throw ParseError(e.what(), 4);
    }
}

std::string serialize_context(const FormalContext& ctx) {
    std::ostringstream out;
    out << "B\n" << ctx.object_count() << "\n" << ctx.attribute_count() << "\n";
    for (std::size_t g = 0; g < ctx.object_count(); ++g) out << ctx.object_name(g) << "\n";
    for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out << ctx.attribute_name(m) << "\n";
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        const Bitset& row = ctx.row(g);
        std::string line(ctx.attribute_count(), '.');
        row.for_each([&](std::size_t m) { line[m] = 'X'; });
        out << line << "\n";
    }
    return out.str();
}

ManyValuedContext::ManyValuedContext(std::vector<MvColumn> columns) : columns_(std::move(columns)) {
    for (const auto& c : columns_)
        if (c.domain.empty()) throw SchemaError("column '" + c.name + "' has an empty value domain");
}

void ManyValuedContext::append_row(std::string object_name, const std::vector<std::string>& values) {
    if (values.size() != columns_.size())
        throw DataError("row has " + std::to_string(values.size()) + " cells, expected " +
                            std::to_string(columns_.size()),
                        cells_.size() + 1, values.size());
    for (std::size_t c = 0; c < values.size(); ++c) {
        const auto& col = columns_[c];
        if (values[c] == col.missing) continue;
        if (std::find(col.domain.begin(), col.domain.end(), values[c]) == col.domain.end())
            throw DataError("value '" + values[c] + "' not in domain of column '" + col.name + "'",
                            cells_.size() + 1, c + 1);
    }
    object_names_.push_back(std::move(object_name));
    cells_.push_back(values);
}

}  // namespace gccl
