#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "coughsig/audio.hpp"
#include "coughsig/features.hpp"
#include "coughsig/stats.hpp"

namespace coughsig {

enum class Pooling {
    frames,         // pool every frame value across the group's clips
    per_clip_mean,  // summarize each clip, then average the summaries
};

enum class FluxScope {
    record,  // min-max normalize flux within each clip
    group,   // min-max normalize over the pooled raw flux of the group
};

struct GroupOptions {
    std::size_t histogram_bins = 20;
    bool exclude_silent = false;  // drop silent-frame values before pooling
    Pooling pooling = Pooling::frames;
    FluxScope flux_scope = FluxScope::record;
};

struct AttributeReport {
    SummaryStats stats;
    Histogram histogram;
    std::uint64_t count = 0;  // pooled values behind the stats
};

// Statistical characterization of one labeled group of clips: summary table
// plus histogram per descriptor.
struct GroupReport {
    std::string label;
    std::size_t clip_count = 0;
    std::size_t frame_count = 0;
    std::vector<std::string> warnings;  // skipped clips etc.
    FeatureConfig config;
    GroupOptions options;
    std::map<std::string, AttributeReport> attributes;  // exactly the seven names
};

// One ranking fact: groups ordered by descending value of one statistic of
// one descriptor. tie is set when any adjacent pair is equal.
struct Ordering {
    std::string attribute;
    std::string statistic;  // "mean" | "max"
    std::vector<std::pair<std::string, double>> ranking;
    bool tie = false;
};

struct ComparisonReport {
    std::vector<GroupReport> groups;
    std::vector<Ordering> orderings;
    bool include_reference = false;  // attach bundled reference ranges to exports
};

// Pool frame-level descriptor values across clips, then summarize and
// histogram each of the seven attributes. Clips shorter than one frame are
// skipped with a warning; throws EmptyGroup when no clip survives.
GroupReport characterize_group(const std::vector<AudioClip>& clips,
                               const std::string& label,
                               const FeatureConfig& config = {},
                               const GroupOptions& options = {});

// Ranking facts for every (attribute, statistic in {mean, max}) pair.
// Throws DuplicateLabels; requires at least two reports.
ComparisonReport compare_groups(std::vector<GroupReport> reports,
                                bool include_reference = false);

Ordering recompute_ordering(const std::vector<GroupReport>& groups,
                            const std::string& attribute,
                            const std::string& statistic);

enum class ExportFormat { csv, json };
ExportFormat export_format_from_name(std::string_view name);

// File outputs, deterministic byte-for-byte for identical inputs.
//   csv:  <label>.stats.csv + <label>.<attribute>.hist.csv per attribute
//   json: <label>.report.json
// Comparison adds comparison.orderings.csv / comparison.report.json.
// Returns the paths written.
std::vector<std::filesystem::path> export_report(const GroupReport& report,
                                                 ExportFormat format,
                                                 const std::filesystem::path& dir);
std::vector<std::filesystem::path> export_report(const ComparisonReport& report,
                                                 ExportFormat format,
                                                 const std::filesystem::path& dir);

std::string to_json_string(const GroupReport& report);
std::string to_json_string(const ComparisonReport& report);
GroupReport group_report_from_json(const std::string& text);
GroupReport load_group_report(const std::filesystem::path& json_path);

// Plain-text summary table (rows = descriptors, columns
// min, max, Mean, med_25, median, med_75, Std).
std::string format_stats_table(const GroupReport& report);
std::string format_orderings(const ComparisonReport& report);

// The bundled reference ranges rendered in the same table layout.
std::string format_reference_tables();

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

} // namespace coughsig
