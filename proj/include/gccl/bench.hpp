#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gccl/learning.hpp"
#include "gccl/scaling.hpp"

namespace gccl {

// Known reference results for a dataset prefix: scaled attribute count and
// concept lattice size as reported in the original GCCL experiments.
struct ReferenceEntry {
    std::size_t attributes_scaled;
    std::size_t concepts;
};

// Looks up the reference for (dataset label, instance count); labels "voting"
// and "mushroom" carry the published rows.
std::optional<ReferenceEntry> reference_for(const std::string& label, std::size_t instances);

struct BenchRow {
    std::string dataset;
    std::size_t instances = 0;
    std::size_t attributes_original = 0;
    std::size_t attributes_scaled = 0;
    std::size_t concepts = 0;
    double initial_seconds = 0.0;
    // batch size -> median seconds; absent value = skipped (not enough rows).
    std::map<std::size_t, std::optional<double>> batch_seconds;
    std::optional<ReferenceEntry> reference;
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

enum class ReportFormat { Tsv, Markdown };

// Deterministic table; cells in BenchRow field order, reference columns last,
// `--` for absent cells, timings with four decimals.
std::string emit_report(const BenchReport& report, ReportFormat format);

struct FormationOptions {
    std::string csv_path;
    std::string schema_path;
    std::size_t instances = 0;
    bool has_header = false;
    MissingPolicy policy = MissingPolicy::NoAttribute;
    unsigned threads = 1;
    unsigned repetitions = 3;
    std::optional<std::uint64_t> shuffle_seed;  // shuffles row order before taking the prefix
    std::string label = "dataset";
};

// Builds the initial state from the first n rows (file order unless shuffled)
// and reports the formation row. initial_seconds is the median enumeration
// time over `repetitions` runs.
std::pair<LearningState, BenchRow> run_formation(const FormationOptions& options);

struct IncrementalOptions {
    std::string csv_path;
    std::string schema_path;
    bool has_header = false;
    std::vector<std::size_t> batch_sizes;
    unsigned repetitions = 3;
    std::optional<std::uint64_t> shuffle_seed;  // must match the formation shuffle
};

// Applies each batch size to a copy of `state` using the rows directly after
// those already consumed, recording median wall time. Batches that exceed
// the remaining rows are skipped (absent cell). The state itself is not
// advanced; this mirrors the "based on initial concepts" timing regime.
void run_incremental(const LearningState& state, const IncrementalOptions& options, BenchRow& row);

// State file: one `GCCL-STATE 1` line, the context in its text layout, then
// the concept space in canonical form. Loading verifies dimensions; byte
// offsets accompany every load failure.
void save_state(const LearningState& state, std::ostream& out);
void save_state(const LearningState& state, const std::string& path);
LearningState load_state(std::istream& in);
LearningState load_state(const std::string& path);

// Reads, optionally shuffles, and scales the first `instances` data rows.
// Returns the scaled context plus the number of original (kept) columns.
std::pair<FormalContext, std::size_t> scale_csv_prefix(const std::string& csv_path,
                                                       const std::string& schema_path,
                                                       std::size_t instances, bool has_header,
                                                       MissingPolicy policy,
                                                       std::optional<std::uint64_t> shuffle_seed);

std::string read_file(const std::string& path);

}  // namespace gccl
