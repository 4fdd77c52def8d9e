#include "gccl/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace gccl {

std::optional<ReferenceEntry> reference_for(const std::string& label, std::size_t instances) {
    if (label == "voting") {
        switch (instances) {
            case 20: return ReferenceEntry{32, 55};
            case 50: return ReferenceEntry{32, 97};
            case 100: return ReferenceEntry{32, 144};
            default: return std::nullopt;
        }
    }
    if (label == "mushroom") {
        switch (instances) {
            case 200: return ReferenceEntry{128, 311};
            case 500: return ReferenceEntry{128, 628};
            case 1000: return ReferenceEntry{128, 1141};
            case 2000: return ReferenceEntry{128, 2149};
            default: return std::nullopt;
        }
    }
    return std::nullopt;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    if (n == 0) return 0.0;
    return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

std::vector<std::vector<std::string>> load_rows(const std::string& csv_path, bool has_header,
                                                std::optional<std::uint64_t> shuffle_seed) {
    auto rows = read_csv(read_file(csv_path));
    if (shuffle_seed) {
        const std::size_t first = has_header ? 1 : 0;
        if (rows.size() > first) {
            std::mt19937_64 rng(*shuffle_seed);
            std::shuffle(rows.begin() + static_cast<std::ptrdiff_t>(first), rows.end(), rng);
        }
    }
    return rows;
}

}  // namespace

std::pair<FormalContext, std::size_t> scale_csv_prefix(const std::string& csv_path,
                                                       const std::string& schema_path,
                                                       std::size_t instances, bool has_header,
                                                       MissingPolicy policy,
                                                       std::optional<std::uint64_t> shuffle_seed) {
    const auto schema = load_schema(schema_path);
    const auto rows = load_rows(csv_path, has_header, shuffle_seed);
    const std::size_t available = rows.size() - (has_header && !rows.empty() ? 1 : 0);
    if (instances > available)
        throw Error("requested " + std::to_string(instances) + " instances, file has " +
                    std::to_string(available));
    const ManyValuedContext mvc = make_many_valued(rows, schema, has_header, instances);
    const NominalScale scale = build_scale(mvc, policy);
    return {apply_scale(mvc, scale), mvc.column_count()};
}

std::pair<LearningState, BenchRow> run_formation(const FormationOptions& options) {
    auto [ctx, original_columns] =
        scale_csv_prefix(options.csv_path, options.schema_path, options.instances,
                         options.has_header, options.policy, options.shuffle_seed);

    std::vector<double> times;
    times.reserve(options.repetitions);
    for (unsigned rep = 0; rep + 1 < options.repetitions; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        const ConceptSpace s = enumerate_concepts(ctx, options.threads);
        times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        (void)s;
    }
    const auto t0 = std::chrono::steady_clock::now();
    LearningState state(std::move(ctx), options.threads);
    times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());

    BenchRow row;
    row.dataset = options.label;
    row.instances = options.instances;
    row.attributes_original = original_columns;
    row.attributes_scaled = state.context().attribute_count();
    row.concepts = state.space().size();
    row.initial_seconds = median(std::move(times));
    row.reference = reference_for(options.label, options.instances);
    return {std::move(state), std::move(row)};
}

namespace {

// Projects one raw CSV row onto the attribute set of an existing state.
// Missing cells map to the column's missing attribute when the scale created
// one, otherwise to no bit.
Bitset project_row(const FormalContext& ctx, const std::vector<SchemaColumn>& schema,
                   const std::vector<std::string>& row, std::size_t row_no) {
    Bitset intent(ctx.attribute_count());
    if (row.size() != schema.size())
        throw DataError("row has " + std::to_string(row.size()) + " fields, schema declares " +
                            std::to_string(schema.size()),
                        row_no, row.size());
    for (std::size_t c = 0; c < schema.size(); ++c) {
        const auto& col = schema[c];
        if (col.dropped()) continue;
        const std::string& value = row[c];
        if (value == col.missing) {
            const auto idx = ctx.attribute_index(col.name + "=" + col.missing);
            if (idx) intent.set(*idx);
            continue;
        }
        const auto idx = ctx.attribute_index(col.name + "=" + value);
        if (!idx)
            throw DataError("value '" + value + "' of column '" + col.name +
                                "' has no scaled attribute in the current state",
                            row_no, c + 1);
        intent.set(*idx);
    }
    return intent;
}

}  // namespace

void run_incremental(const LearningState& state, const IncrementalOptions& options, BenchRow& row) {
    const auto schema = load_schema(options.schema_path);
    const auto rows = load_rows(options.csv_path, options.has_header, options.shuffle_seed);
    const std::size_t header = options.has_header && !rows.empty() ? 1 : 0;
    const std::size_t consumed = state.context().object_count();
    const std::size_t available = rows.size() - header;

    for (const std::size_t batch_size : options.batch_sizes) {
        if (consumed + batch_size > available) {
            row.batch_seconds[batch_size] = std::nullopt;
            continue;
        }
        std::vector<NewObject> batch;
        batch.reserve(batch_size);
        for (std::size_t i = 0; i < batch_size; ++i) {
            const std::size_t r = header + consumed + i;
            batch.push_back({"r" + std::to_string(consumed + i),
                             project_row(state.context(), schema, rows[r], r + 1)});
        }
        std::vector<double> times;
        times.reserve(options.repetitions);
        for (unsigned rep = 0; rep < options.repetitions; ++rep) {
            LearningState copy = state;
            const auto t0 = std::chrono::steady_clock::now();
            copy.extend_with_objects(batch);
            times.push_back(
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        }
        row.batch_seconds[batch_size] = median(std::move(times));
    }
}

namespace {

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", s);
    return buf;
}

std::string format_delta(std::size_t actual, std::size_t reference) {
    char buf[32];
    const double pct = 100.0 * (static_cast<double>(actual) - static_cast<double>(reference)) /
                       static_cast<double>(reference);
    std::snprintf(buf, sizeof buf, "%+.1f%%", pct);
    return buf;
}

}  // namespace

std::string emit_report(const BenchReport& report, ReportFormat format) {
    std::vector<std::size_t> batch_sizes;
    for (const auto& r : report.rows)
        for (const auto& [k, v] : r.batch_seconds)
            if (std::find(batch_sizes.begin(), batch_sizes.end(), k) == batch_sizes.end())
                batch_sizes.push_back(k);
    std::sort(batch_sizes.begin(), batch_sizes.end());

    std::vector<std::string> header = {"dataset",      "instances", "attributes_o",
                                       "attributes_s", "concepts",  "initial_s"};
    for (const auto k : batch_sizes) header.push_back("inc" + std::to_string(k) + "_s");
    header.insert(header.end(), {"ref_attributes_s", "ref_concepts", "concepts_delta"});

    std::vector<std::vector<std::string>> cells;
    for (const auto& r : report.rows) {
        std::vector<std::string> c = {r.dataset,
                                      std::to_string(r.instances),
                                      std::to_string(r.attributes_original),
                                      std::to_string(r.attributes_scaled),
                                      std::to_string(r.concepts),
                                      format_seconds(r.initial_seconds)};
        for (const auto k : batch_sizes) {
            const auto it = r.batch_seconds.find(k);
            if (it == r.batch_seconds.end() || !it->second)
                c.push_back("--");
            else
                c.push_back(format_seconds(*it->second));
        }
        if (r.reference) {
            c.push_back(std::to_string(r.reference->attributes_scaled));
            c.push_back(std::to_string(r.reference->concepts));
            c.push_back(format_delta(r.concepts, r.reference->concepts));
        } else {
            c.insert(c.end(), {"--", "--", "--"});
        }
        cells.push_back(std::move(c));
    }

    std::ostringstream out;
    if (format == ReportFormat::Tsv) {
        for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "\t" : "") << header[i];
        out << "\n";
        for (const auto& row : cells) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
            out << "\n";
        }
    } else {
        out << "|";
        for (const auto& h : header) out << " " << h << " |";
        out << "\n|";
        for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
        out << "\n";
        for (const auto& row : cells) {
            out << "|";
            for (const auto& c : row) out << " " << c << " |";
            out << "\n";
        }
    }
    return out.str();
}

namespace {

constexpr std::string_view kStateMagic = "GCCL-STATE 1";

// Start offsets of every line, for error reporting and block slicing.
std::vector<std::size_t> line_offsets(std::string_view text) {
    std::vector<std::size_t> offsets{0};
    for (std::size_t i = 0; i < text.size(); ++i)
        if (text[i] == '\n') offsets.push_back(i + 1);
    return offsets;
}

}  // namespace

void save_state(const LearningState& state, std::ostream& out) {
    out << kStateMagic << "\n" << serialize_context(state.context()) << serialize_space(state.space());
}

void save_state(const LearningState& state, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open file for writing: " + path);
    save_state(state, out);
    if (!out) throw Error("write failed: " + path);
}

LearningState load_state(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto offsets = line_offsets(text);
    const auto offset_of_line = [&](std::size_t line_no_1based) {
        const std::size_t i = line_no_1based ? line_no_1based - 1 : 0;
        return i < offsets.size() ? offsets[i] : text.size();
    };

    std::istringstream lines(text);
    std::string line;
    if (!std::getline(lines, line) || line != kStateMagic)
        throw LoadError("missing GCCL-STATE header", 0);
    if (offsets.size() < 4) throw LoadError("truncated state file", text.size());

    // The context block spans a computable number of lines from line 2 on.
    std::istringstream header_probe(text.substr(offsets[2]));
    std::size_t n_objects = 0, n_attrs = 0;
    if (!(header_probe >> n_objects)) throw LoadError("malformed object count", offsets[2]);
    {
        std::istringstream attr_probe(text.substr(offsets[3]));
        if (!(attr_probe >> n_attrs)) throw LoadError("malformed attribute count", offsets[3]);
    }
    const std::size_t context_first_line = 2;
    const std::size_t context_lines = 3 + 2 * n_objects + n_attrs;
    const std::size_t space_first_line = context_first_line + context_lines;
    if (space_first_line - 1 >= offsets.size()) throw LoadError("truncated state file", text.size());

    const std::size_t context_begin = offsets[context_first_line - 1];
    const std::size_t context_end = offset_of_line(space_first_line);

    FormalContext ctx;
    try {
        ctx = parse_context(std::string_view(text).substr(context_begin, context_end - context_begin));
    } catch (const ParseError& e) {
        throw LoadError(e.what(), offset_of_line(context_first_line + (e.line() ? e.line() - 1 : 0)));
    }

    ConceptSpace space;
    try {
        space = parse_space(std::string_view(text).substr(context_end), ctx.generation());
    } catch (const ParseError& e) {
        throw LoadError(e.what(), offset_of_line(space_first_line + (e.line() ? e.line() - 1 : 0)));
    }
    if (space.object_count() != ctx.object_count() || space.attribute_count() != ctx.attribute_count())
        throw LoadError("concept space dimensions do not match context", context_end);

    try {
        return LearningState(std::move(ctx), std::move(space));
    } catch (const Error& e) {
        throw LoadError(e.what(), context_end);
    }
}

LearningState load_state(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    return load_state(in);
}

}  // namespace gccl
