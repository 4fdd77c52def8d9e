#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gccl/context.hpp"

namespace gccl {

enum class MissingPolicy {
    NoAttribute,   // a missing cell sets no bit in its column's block
    OwnAttribute,  // columns that contain missing cells get one extra attribute
};

// Declared schema of one CSV column. An empty domain marks a column that is
// present in the file but not ingested (schema line `name : -`).
struct SchemaColumn {
    std::string name;
    std::vector<std::string> domain;
    std::string missing = "?";

    bool dropped() const { return domain.empty(); }
};

// Schema file: one line per CSV column, `name : v1,v2,...,vk : missing`,
// `name : -` to drop a column; `#` starts a comment.
std::vector<SchemaColumn> parse_schema(std::string_view text);
std::vector<SchemaColumn> load_schema(const std::string& path);

// Minimal CSV: comma-separated, double quotes with doubled-quote escapes.
std::vector<std::vector<std::string>> read_csv(std::string_view text);

// Builds a many-valued context from CSV rows and a schema; dropped columns
// are skipped, every kept cell validated. Objects are named r0, r1, ...
// max_rows bounds ingestion (nullopt = all rows).
ManyValuedContext make_many_valued(const std::vector<std::vector<std::string>>& rows,
                                   const std::vector<SchemaColumn>& schema, bool has_header,
                                   std::optional<std::size_t> max_rows = std::nullopt,
                                   std::size_t skip_rows = 0);

// One source column's block of scaled attributes, in declared-domain order;
// the missing-value attribute (OwnAttribute policy only) closes the block.
struct ScaleBlock {
    std::string column;
    std::vector<std::string> values;           // domain value per scaled attribute
    std::vector<std::string> attribute_names;  // "column=value"
    std::optional<std::string> missing_attribute;
};

class NominalScale {
public:
    NominalScale(std::vector<ScaleBlock> blocks, MissingPolicy policy);

    const std::vector<ScaleBlock>& blocks() const { return blocks_; }
    MissingPolicy policy() const { return policy_; }
    std::size_t attribute_count() const { return attribute_count_; }
    std::vector<std::string> attribute_names() const;

private:
    std::vector<ScaleBlock> blocks_;
    MissingPolicy policy_;
    std::size_t attribute_count_ = 0;
};

// One scaled attribute per (column, domain value); with OwnAttribute, one
// more per column whose data actually contains the missing marker.
NominalScale build_scale(const ManyValuedContext& mvc, MissingPolicy policy);

// Object g gets attribute "c=v" exactly when cell(g, c) = v.
FormalContext apply_scale(const ManyValuedContext& mvc, const NominalScale& scale);

}  // namespace gccl
