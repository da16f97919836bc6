#include "coughsig/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string_view>
#include <utility>

#include "json.hpp"

#include "coughsig/errors.hpp"
#include "coughsig/reference.hpp"

namespace coughsig {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

ExportFormat export_format_from_name(std::string_view name) {
    if (name == "csv") return ExportFormat::csv;
    if (name == "json") return ExportFormat::json;
    throw InvalidArgument("unknown export format: " + std::string(name));
}

namespace {

std::string_view pooling_name(Pooling p) {
    return p == Pooling::frames ? "frames" : "clips";
}

Pooling pooling_from_name(std::string_view name) {
    if (name == "frames") return Pooling::frames;
    if (name == "clips") return Pooling::per_clip_mean;
    throw InvalidArgument("unknown pooling: " + std::string(name));
}

std::string_view flux_scope_name(FluxScope s) {
    return s == FluxScope::record ? "record" : "group";
}

FluxScope flux_scope_from_name(std::string_view name) {
    if (name == "record") return FluxScope::record;
    if (name == "group") return FluxScope::group;
    throw InvalidArgument("unknown flux scope: " + std::string(name));
}

std::string_view flux_norm_name(FluxNorm n) {
    return n == FluxNorm::record_minmax ? "minmax" : "raw";
}

FluxNorm flux_norm_from_name(std::string_view name) {
    if (name == "minmax") return FluxNorm::record_minmax;
    if (name == "raw") return FluxNorm::raw;
    throw InvalidArgument("unknown flux normalization: " + std::string(name));
}

double mean_of(const std::vector<double>& v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

} // namespace

GroupReport characterize_group(const std::vector<AudioClip>& clips,
                               const std::string& label,
                               const FeatureConfig& config,
                               const GroupOptions& options) {
    if (clips.empty()) throw EmptyGroup("group '" + label + "' has no clips");
    if (options.histogram_bins == 0) throw InvalidArgument("histogram_bins must be positive");

    GroupReport report;
    report.label = label;
    report.config = config;
    report.options = options;

    std::vector<ExtractionResult> results;
    results.reserve(clips.size());
    for (const AudioClip& clip : clips) {
        try {
            results.push_back(extract_all(canonicalize(clip), config));
            report.frame_count += results.back().frame_count;
        } catch (const ClipTooShort& e) {
            const std::string& src = clip.source_path();
            report.warnings.push_back("skipped " + (src.empty() ? "<unnamed>" : src) +
                                      ": " + e.what());
        }
    }
    report.clip_count = results.size();
    if (results.empty()) {
        throw EmptyGroup("group '" + label + "': every clip was shorter than one frame");
    }

    // Group-scope flux remaps the pooled raw series instead of each record.
    std::vector<std::vector<double>> flux_values(results.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        flux_values[i] = results[i].features.at("flux").values;
    }
    if (config.flux_normalization == FluxNorm::record_minmax &&
        options.flux_scope == FluxScope::group) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& r : results) {
            for (double v : r.flux_raw.values) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& raw = results[i].flux_raw.values;
            for (std::size_t j = 0; j < raw.size(); ++j) {
                flux_values[i][j] = hi > lo ? (raw[j] - lo) / (hi - lo) : 0.0;
            }
        }
    }

    for (const auto& attr : kAttributes) {
        const std::string name(attr.name);
        const bool is_flux = name == "flux";
        std::vector<double> pool;
        for (std::size_t ci = 0; ci < results.size(); ++ci) {
            const ExtractionResult& res = results[ci];
            const std::vector<double>& vals =
                is_flux ? flux_values[ci] : res.features.at(name).values;
            std::vector<double> kept;
            kept.reserve(vals.size());
            for (std::size_t j = 0; j < vals.size(); ++j) {
                if (options.exclude_silent) {
                    // flux value j spans frames j and j+1
                    const bool drop = is_flux ? (res.silent[j] || res.silent[j + 1])
                                              : res.silent[j];
                    if (drop) continue;
                }
                kept.push_back(vals[j]);
            }
            if (options.pooling == Pooling::frames) {
                pool.insert(pool.end(), kept.begin(), kept.end());
            } else if (!kept.empty()) {
                pool.push_back(mean_of(kept));
            }
        }
        if (pool.empty()) {
            if (is_flux) {
                throw TooFewFrames("group '" + label +
                                   "' has no flux values; clips need at least two frames");
            }
            throw EmptyInput("group '" + label + "' has no " + name +
                             " values after exclusions");
        }
        AttributeReport ar;
        ar.stats = summarize(pool);
        ar.histogram = build_histogram(pool, options.histogram_bins);
        ar.count = pool.size();
        report.attributes.emplace(name, std::move(ar));
    }
    return report;
}

Ordering recompute_ordering(const std::vector<GroupReport>& groups,
                            const std::string& attribute,
                            const std::string& statistic) {
    attribute_info(attribute);  // validates the name
    double SummaryStats::*field = nullptr;
    if (statistic == "mean") {
        field = &SummaryStats::mean;
    } else if (statistic == "max") {
        field = &SummaryStats::max;
    } else {
        throw InvalidArgument("ordering statistic must be mean or max, got " + statistic);
    }

    Ordering ord;
    ord.attribute = attribute;
    ord.statistic = statistic;
    for (const GroupReport& g : groups) {
        auto it = g.attributes.find(attribute);
        if (it == g.attributes.end()) {
            throw InvalidArgument("group '" + g.label + "' lacks attribute " + attribute);
        }
        ord.ranking.emplace_back(g.label, it->second.stats.*field);
    }
    // ties rank alphabetically so the order never depends on input order
    std::stable_sort(ord.ranking.begin(), ord.ranking.end(),
                     [](const auto& a, const auto& b) {
                         if (a.second != b.second) return a.second > b.second;
                         return a.first < b.first;
                     });
    for (std::size_t i = 1; i < ord.ranking.size(); ++i) {
        if (ord.ranking[i - 1].second == ord.ranking[i].second) {
            ord.tie = true;
            break;
        }
    }
    return ord;
}

ComparisonReport compare_groups(std::vector<GroupReport> reports, bool include_reference) {
    if (reports.size() < 2) throw EmptyInput("compare needs at least two groups");
    for (std::size_t i = 0; i < reports.size(); ++i) {
        for (std::size_t j = i + 1; j < reports.size(); ++j) {
            if (reports[i].label == reports[j].label) {
                throw DuplicateLabels("duplicate group label: " + reports[i].label);
            }
        }
    }
    ComparisonReport cmp;
    cmp.groups = std::move(reports);
    cmp.include_reference = include_reference;
    for (const auto& attr : kAttributes) {
        for (const char* stat : {"mean", "max"}) {
            cmp.orderings.push_back(
                recompute_ordering(cmp.groups, std::string(attr.name), stat));
        }
    }
    return cmp;
}

// --- serialization ---------------------------------------------------------

namespace {

ordered_json stats_to_json(const SummaryStats& s) {
    return ordered_json{{"min", s.min},     {"max", s.max},    {"mean", s.mean},
                        {"p25", s.p25},     {"median", s.median}, {"p75", s.p75},
                        {"std", s.std_dev}};
}

SummaryStats stats_from_json(const ordered_json& j) {
    SummaryStats s;
    s.min = j.at("min").get<double>();
    s.max = j.at("max").get<double>();
    s.mean = j.at("mean").get<double>();
    s.p25 = j.at("p25").get<double>();
    s.median = j.at("median").get<double>();
    s.p75 = j.at("p75").get<double>();
    s.std_dev = j.at("std").get<double>();
    return s;
}

ordered_json group_to_json(const GroupReport& r) {
    ordered_json j;
    j["label"] = r.label;
    j["clip_count"] = r.clip_count;
    j["frame_count"] = r.frame_count;
    j["warnings"] = r.warnings;
    j["config"] = ordered_json{
        {"frame_length", r.config.frame_length},
        {"hop", r.config.hop},
        {"window", std::string(window_name(r.config.window))},
        {"roll_percent", r.config.roll_percent},
        {"zcr_epsilon_rel", r.config.zcr_epsilon_rel},
        {"flatness_floor", r.config.flatness_floor},
        {"entropy_normalized", r.config.entropy_normalized},
        {"flux_normalization", std::string(flux_norm_name(r.config.flux_normalization))},
    };
    j["options"] = ordered_json{
        {"histogram_bins", r.options.histogram_bins},
        {"exclude_silent", r.options.exclude_silent},
        {"pooling", std::string(pooling_name(r.options.pooling))},
        {"flux_scope", std::string(flux_scope_name(r.options.flux_scope))},
    };
    ordered_json attrs;
    for (const auto& attr : kAttributes) {
        const AttributeReport& ar = r.attributes.at(attr.name);
        attrs[attr.name] = ordered_json{
            {"unit", attr.unit},
            {"count", ar.count},
            {"stats", stats_to_json(ar.stats)},
            {"histogram", ordered_json{{"bin_edges", ar.histogram.bin_edges},
                                       {"counts", ar.histogram.counts}}},
        };
    }
    j["attributes"] = std::move(attrs);
    return j;
}

GroupReport group_from_json(const ordered_json& j) {
    GroupReport r;
    r.label = j.at("label").get<std::string>();
    r.clip_count = j.at("clip_count").get<std::size_t>();
    r.frame_count = j.at("frame_count").get<std::size_t>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();

    const ordered_json& cj = j.at("config");
    r.config.frame_length = cj.at("frame_length").get<std::size_t>();
    r.config.hop = cj.at("hop").get<std::size_t>();
    r.config.window = window_from_name(cj.at("window").get<std::string>());
    r.config.roll_percent = cj.at("roll_percent").get<double>();
    r.config.zcr_epsilon_rel = cj.at("zcr_epsilon_rel").get<double>();
    r.config.flatness_floor = cj.at("flatness_floor").get<double>();
    r.config.entropy_normalized = cj.at("entropy_normalized").get<bool>();
    r.config.flux_normalization =
        flux_norm_from_name(cj.at("flux_normalization").get<std::string>());

    const ordered_json& oj = j.at("options");
    r.options.histogram_bins = oj.at("histogram_bins").get<std::size_t>();
    r.options.exclude_silent = oj.at("exclude_silent").get<bool>();
    r.options.pooling = pooling_from_name(oj.at("pooling").get<std::string>());
    r.options.flux_scope = flux_scope_from_name(oj.at("flux_scope").get<std::string>());

    for (const auto& attr : kAttributes) {
        const ordered_json& aj = j.at("attributes").at(attr.name);
        AttributeReport ar;
        ar.count = aj.at("count").get<std::uint64_t>();
        ar.stats = stats_from_json(aj.at("stats"));
        ar.histogram.bin_edges = aj.at("histogram").at("bin_edges").get<std::vector<double>>();
        ar.histogram.counts =
            aj.at("histogram").at("counts").get<std::vector<std::uint64_t>>();
        ar.histogram.total = 0;
        for (std::uint64_t c : ar.histogram.counts) ar.histogram.total += c;
        r.attributes.emplace(attr.name, std::move(ar));
    }
    return r;
}

ordered_json reference_to_json() {
    ordered_json tables = ordered_json::array();
    for (const auto& table : reference_tables()) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : table.rows) {
            rows.push_back(ordered_json{{"attribute", std::string(row.attribute)},
                                        {"min", row.stats.min},
                                        {"max", row.stats.max},
                                        {"mean", row.stats.mean},
                                        {"p25", row.stats.p25},
                                        {"median", row.stats.median},
                                        {"p75", row.stats.p75},
                                        {"std", row.stats.std_dev}});
        }
        tables.push_back(ordered_json{{"group", std::string(table.group)},
                                      {"title", std::string(table.title)},
                                      {"rows", std::move(rows)}});
    }
    return tables;
}

ordered_json comparison_to_json(const ComparisonReport& r) {
    ordered_json j;
    ordered_json groups = ordered_json::array();
    for (const GroupReport& g : r.groups) groups.push_back(group_to_json(g));
    j["groups"] = std::move(groups);
    ordered_json orderings = ordered_json::array();
    for (const Ordering& o : r.orderings) {
        ordered_json ranking = ordered_json::array();
        for (const auto& [label, value] : o.ranking) {
            ranking.push_back(ordered_json{{"label", label}, {"value", value}});
        }
        orderings.push_back(ordered_json{{"attribute", o.attribute},
                                         {"statistic", o.statistic},
                                         {"ranking", std::move(ranking)},
                                         {"tie", o.tie}});
    }
    j["orderings"] = std::move(orderings);
    if (r.include_reference) j["reference"] = reference_to_json();
    return j;
}

} // namespace

std::string to_json_string(const GroupReport& report) {
    return group_to_json(report).dump(2);
}

std::string to_json_string(const ComparisonReport& report) {
    return comparison_to_json(report).dump(2);
}

GroupReport group_report_from_json(const std::string& text) {
    try {
        return group_from_json(ordered_json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw MalformedFile(std::string("bad report JSON: ") + e.what());
    }
}

GroupReport load_group_report(const std::filesystem::path& json_path) {
    std::ifstream in(json_path, std::ios::binary);
    if (!in) throw IoError("cannot open report: " + json_path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + json_path.string());
    return group_report_from_json(buf.str());
}

// --- file export -----------------------------------------------------------

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << content;
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

void ensure_dir(const std::filesystem::path& dir) {
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

std::string stats_csv(const GroupReport& r) {
    std::string s = "attribute,min,max,mean,p25,median,p75,std\n";
    for (const auto& attr : kAttributes) {
        const SummaryStats& st = r.attributes.at(attr.name).stats;
        s += std::string(attr.name) + ',' + format_double(st.min) + ',' +
             format_double(st.max) + ',' + format_double(st.mean) + ',' +
             format_double(st.p25) + ',' + format_double(st.median) + ',' +
             format_double(st.p75) + ',' + format_double(st.std_dev) + '\n';
    }
    return s;
}

std::string hist_csv(const Histogram& h) {
    std::string s = "bin_lo,bin_hi,count\n";
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        s += format_double(h.bin_edges[i]) + ',' + format_double(h.bin_edges[i + 1]) + ',' +
             std::to_string(h.counts[i]) + '\n';
    }
    return s;
}

std::string orderings_csv(const ComparisonReport& r) {
    std::string s = "attribute,statistic,rank,label,value,tie\n";
    for (const Ordering& o : r.orderings) {
        for (std::size_t i = 0; i < o.ranking.size(); ++i) {
            s += o.attribute + ',' + o.statistic + ',' + std::to_string(i + 1) + ',' +
                 o.ranking[i].first + ',' + format_double(o.ranking[i].second) + ',' +
                 (o.tie ? "true" : "false") + '\n';
        }
    }
    return s;
}

std::string reference_csv() {
    std::string s = "group,attribute,min,max,mean,p25,median,p75,std\n";
    for (const auto& table : reference_tables()) {
        for (const auto& row : table.rows) {
            const ReferenceStats& st = row.stats;
            s += std::string(table.group) + ',' + std::string(row.attribute) + ',' +
                 format_double(st.min) + ',' + format_double(st.max) + ',' +
                 format_double(st.mean) + ',' + format_double(st.p25) + ',' +
                 format_double(st.median) + ',' + format_double(st.p75) + ',' +
                 format_double(st.std_dev) + '\n';
        }
    }
    return s;
}

} // namespace

std::vector<std::filesystem::path> export_report(const GroupReport& report,
                                                 ExportFormat format,
                                                 const std::filesystem::path& dir) {
    ensure_dir(dir);
    std::vector<std::filesystem::path> written;
    if (format == ExportFormat::csv) {
        auto stats_path = dir / (report.label + ".stats.csv");
        write_file(stats_path, stats_csv(report));
        written.push_back(stats_path);
        for (const auto& attr : kAttributes) {
            auto hist_path =
                dir / (report.label + "." + std::string(attr.name) + ".hist.csv");
            write_file(hist_path, hist_csv(report.attributes.at(attr.name).histogram));
            written.push_back(hist_path);
        }
    } else {
        auto json_path = dir / (report.label + ".report.json");
        write_file(json_path, to_json_string(report) + "\n");
        written.push_back(json_path);
    }
    return written;
}

std::vector<std::filesystem::path> export_report(const ComparisonReport& report,
                                                 ExportFormat format,
                                                 const std::filesystem::path& dir) {
    ensure_dir(dir);
    std::vector<std::filesystem::path> written;
    if (format == ExportFormat::csv) {
        for (const GroupReport& g : report.groups) {
            auto paths = export_report(g, format, dir);
            written.insert(written.end(), paths.begin(), paths.end());
        }
        auto ord_path = dir / "comparison.orderings.csv";
        write_file(ord_path, orderings_csv(report));
        written.push_back(ord_path);
        if (report.include_reference) {
            auto ref_path = dir / "reference.stats.csv";
            write_file(ref_path, reference_csv());
            written.push_back(ref_path);
        }
    } else {
        auto json_path = dir / "comparison.report.json";
        write_file(json_path, to_json_string(report) + "\n");
        written.push_back(json_path);
    }
    return written;
}

// --- plain-text rendering ---------------------------------------------------

namespace {

void append_row(std::string& out, const char* display, const double* cells) {
    char line[200];
    std::snprintf(line, sizeof line, "%-26s%11.4g%11.4g%11.4g%11.4g%11.4g%11.4g%11.4g\n",
                  display, cells[0], cells[1], cells[2], cells[3], cells[4], cells[5],
                  cells[6]);
    out += line;
}

void append_header(std::string& out) {
    char line[200];
    std::snprintf(line, sizeof line, "%-26s%11s%11s%11s%11s%11s%11s%11s\n", "Attributes",
                  "min", "max", "Mean", "med_25", "median", "med_75", "Std");
    out += line;
}

} // namespace

std::string format_stats_table(const GroupReport& report) {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "Group: %s  (clips: %zu, frames: %zu)\n",
                  report.label.c_str(), report.clip_count, report.frame_count);
    out += line;
    append_header(out);
    for (const auto& attr : kAttributes) {
        const SummaryStats& s = report.attributes.at(attr.name).stats;
        const double cells[7] = {s.min, s.max, s.mean, s.p25, s.median, s.p75, s.std_dev};
        append_row(out, attr.display, cells);
    }
    for (const std::string& w : report.warnings) out += "warning: " + w + "\n";
    return out;
}

std::string format_orderings(const ComparisonReport& report) {
    std::string out = "Orderings (descending):\n";
    for (const Ordering& o : report.orderings) {
        char head[64];
        std::snprintf(head, sizeof head, "  %-9s %-4s: ", o.attribute.c_str(),
                      o.statistic.c_str());
        out += head;
        for (std::size_t i = 0; i < o.ranking.size(); ++i) {
            if (i > 0) {
                const bool eq = o.ranking[i - 1].second == o.ranking[i].second;
                out += eq ? " = " : " > ";
            }
            char cell[96];
            std::snprintf(cell, sizeof cell, "%s (%.6g)", o.ranking[i].first.c_str(),
                          o.ranking[i].second);
            out += cell;
        }
        out += '\n';
    }
    if (report.include_reference) {
        out += "\n" + format_reference_tables();
    }
    return out;
}

std::string format_reference_tables() {
    std::string out = "Bundled reference ranges:\n";
    for (const auto& table : reference_tables()) {
        out += "  [" + std::string(table.group) + "] " + std::string(table.title) + "\n";
        append_header(out);
        for (const auto& row : table.rows) {
            const ReferenceStats& s = row.stats;
            const double cells[7] = {s.min, s.max, s.mean, s.p25, s.median, s.p75,
                                     s.std_dev};
            append_row(out, attribute_info(row.attribute).display, cells);
        }
    }
    return out;
}

} // namespace coughsig
