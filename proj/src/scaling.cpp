#include "gccl/scaling.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace gccl {

namespace {

std::string trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.emplace_back(s.substr(pos));
            return out;
        }
        out.emplace_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

}  // namespace

std::vector<SchemaColumn> parse_schema(std::string_view text) {
    std::vector<SchemaColumn> schema;
    std::unordered_set<std::string> seen;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const auto parts = split(line, ':');
        if (parts.size() != 2 && parts.size() != 3)
            throw ParseError("expected 'name : values : missing' or 'name : -'", line_no);
        SchemaColumn col;
        col.name = trim(parts[0]);
        if (col.name.empty()) throw ParseError("empty column name", line_no);
        if (!seen.insert(col.name).second)
            throw ParseError("duplicate column name '" + col.name + "'", line_no);
        const std::string domain = trim(parts[1]);
        if (domain == "-") {
            if (parts.size() == 3) throw ParseError("dropped column takes no missing marker", line_no);
            schema.push_back(std::move(col));
            continue;
        }
        if (parts.size() != 3) throw ParseError("missing marker required", line_no);
        for (const auto& v : split(domain, ',')) {
            const std::string value = trim(v);
            if (value.empty()) throw ParseError("empty domain value", line_no);
            if (std::find(col.domain.begin(), col.domain.end(), value) != col.domain.end())
                throw ParseError("duplicate domain value '" + value + "'", line_no);
            col.domain.push_back(value);
        }
        col.missing = trim(parts[2]);
        if (col.missing.empty()) throw ParseError("empty missing marker", line_no);
        if (std::find(col.domain.begin(), col.domain.end(), col.missing) != col.domain.end())
            throw ParseError("missing marker collides with domain value", line_no);
        schema.push_back(std::move(col));
    }
    if (schema.empty()) throw ParseError("schema declares no columns", line_no ? line_no : 1);
    return schema;
}

std::vector<SchemaColumn> load_schema(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open schema file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_schema(buf.str());
}

std::vector<std::vector<std::string>> read_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool row_has_content = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                quoted = true;
                row_has_content = true;
                break;
            case ',':
                row.push_back(std::move(field));
                field.clear();
                row_has_content = true;
                break;
            case '\r':
                break;
            case '\n':
                if (row_has_content || !field.empty()) {
                    row.push_back(std::move(field));
                    rows.push_back(std::move(row));
                }
                field.clear();
                row.clear();
                row_has_content = false;
                break;
            default:
                field += c;
                row_has_content = true;
        }
    }
    if (row_has_content || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

ManyValuedContext make_many_valued(const std::vector<std::vector<std::string>>& rows,
                                   const std::vector<SchemaColumn>& schema, bool has_header,
                                   std::optional<std::size_t> max_rows, std::size_t skip_rows) {
    std::vector<MvColumn> kept;
    std::vector<std::size_t> kept_csv_index;
    for (std::size_t c = 0; c < schema.size(); ++c) {
        if (schema[c].dropped()) continue;
        kept.push_back({schema[c].name, schema[c].domain, schema[c].missing});
        kept_csv_index.push_back(c);
    }
    ManyValuedContext mvc(std::move(kept));

    const std::size_t first = (has_header ? 1 : 0) + skip_rows;
    std::size_t taken = 0;
    std::vector<std::string> values(kept_csv_index.size());
    for (std::size_t r = first; r < rows.size(); ++r) {
        if (max_rows && taken >= *max_rows) break;
        if (rows[r].size() != schema.size())
            throw DataError("row has " + std::to_string(rows[r].size()) + " fields, schema declares " +
                                std::to_string(schema.size()),
                            r + 1, rows[r].size());
        for (std::size_t k = 0; k < kept_csv_index.size(); ++k) values[k] = rows[r][kept_csv_index[k]];
        mvc.append_row("r" + std::to_string(r - (has_header ? 1 : 0)), values);
        ++taken;
    }
    return mvc;
}

NominalScale::NominalScale(std::vector<ScaleBlock> blocks, MissingPolicy policy)
    : blocks_(std::move(blocks)), policy_(policy) {
    std::unordered_set<std::string> seen;
    for (const auto& b : blocks_) {
        for (const auto& name : b.attribute_names) {
            if (!seen.insert(name).second)
                throw SchemaError("scaled attribute name collision: " + name);
            ++attribute_count_;
        }
        if (b.missing_attribute) {
            if (!seen.insert(*b.missing_attribute).second)
                throw SchemaError("scaled attribute name collision: " + *b.missing_attribute);
            ++attribute_count_;
        }
    }
}

std::vector<std::string> NominalScale::attribute_names() const {
    std::vector<std::string> out;
    out.reserve(attribute_count_);
    for (const auto& b : blocks_) {
        out.insert(out.end(), b.attribute_names.begin(), b.attribute_names.end());
        if (b.missing_attribute) out.push_back(*b.missing_attribute);
    }
    return out;
}

NominalScale build_scale(const ManyValuedContext& mvc, MissingPolicy policy) {
    std::vector<ScaleBlock> blocks;
    blocks.reserve(mvc.column_count());
    for (std::size_t c = 0; c < mvc.column_count(); ++c) {
        const MvColumn& col = mvc.column(c);
        ScaleBlock block;
        block.column = col.name;
        for (const auto& v : col.domain) {
            block.values.push_back(v);
            block.attribute_names.push_back(col.name + "=" + v);
        }
        if (policy == MissingPolicy::OwnAttribute) {
            for (std::size_t r = 0; r < mvc.row_count(); ++r) {
                if (mvc.is_missing(r, c)) {
                    block.missing_attribute = col.name + "=" + col.missing;
                    break;
                }
            }
        }
        blocks.push_back(std::move(block));
    }
    return NominalScale(std::move(blocks), policy);
}

FormalContext apply_scale(const ManyValuedContext& mvc, const NominalScale& scale) {
    if (scale.blocks().size() != mvc.column_count())
        throw SchemaError("scale was built for a different column layout");

    std::vector<std::string> attributes = scale.attribute_names();
    // Start offsets of each column's block in the scaled attribute order.
    std::vector<std::size_t> offsets(scale.blocks().size());
    std::size_t off = 0;
    for (std::size_t b = 0; b < scale.blocks().size(); ++b) {
        offsets[b] = off;
        off += scale.blocks()[b].attribute_names.size() +
               (scale.blocks()[b].missing_attribute ? 1 : 0);
    }

    std::vector<std::string> objects;
    std::vector<Bitset> rows;
    objects.reserve(mvc.row_count());
    rows.reserve(mvc.row_count());
    for (std::size_t r = 0; r < mvc.row_count(); ++r) {
        Bitset row(scale.attribute_count());
        for (std::size_t c = 0; c < mvc.column_count(); ++c) {
            const ScaleBlock& block = scale.blocks()[c];
            const std::string& value = mvc.cell(r, c);
            if (value == mvc.column(c).missing) {
                if (block.missing_attribute)
                    row.set(offsets[c] + block.values.size());
                continue;
            }
            const auto it = std::find(block.values.begin(), block.values.end(), value);
            if (it == block.values.end())
                throw DataError("value '" + value + "' not covered by scale for column '" +
                                    block.column + "'",
                                r + 1, c + 1);
            row.set(offsets[c] + static_cast<std::size_t>(it - block.values.begin()));
        }
        objects.push_back(mvc.object_name(r));
        rows.push_back(std::move(row));
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

}  // namespace gccl
