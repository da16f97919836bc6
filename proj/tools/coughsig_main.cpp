// coughsig: frame-level spectral descriptors for short audio recordings.
//
// Subcommands:
//   analyze  WAV files -> per-group stats table, histograms, exports
//   compare  two or more groups -> ranking facts
//   synth    deterministic test signals -> WAV
//
// Exit codes: 0 success, 1 I/O or file-format error, 2 usage or empty input.

#include <glob.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "coughsig/audio.hpp"
#include "coughsig/errors.hpp"
#include "coughsig/features.hpp"
#include "coughsig/report.hpp"
#include "coughsig/synth.hpp"
#include "coughsig/wav.hpp"

namespace fs = std::filesystem;
using namespace coughsig;

namespace {

// Shell-style glob expansion; literal paths pass through via glob(3) too.
// "-" means standard input and is kept verbatim.
std::vector<std::string> expand_inputs(const std::vector<std::string>& patterns) {
    std::vector<std::string> paths;
    for (const std::string& pattern : patterns) {
        if (pattern == "-") {
            paths.push_back(pattern);
            continue;
        }
        glob_t g{};
        const int rc = ::glob(pattern.c_str(), 0, nullptr, &g);
        if (rc == GLOB_NOMATCH) {
            ::globfree(&g);
            throw EmptyInput("no files match: " + pattern);
        }
        if (rc != 0) {
            ::globfree(&g);
            throw IoError("cannot expand pattern: " + pattern);
        }
        for (std::size_t i = 0; i < g.gl_pathc; ++i) paths.emplace_back(g.gl_pathv[i]);
        ::globfree(&g);
    }
    if (paths.empty()) throw EmptyInput("no input files");
    return paths;
}

AudioClip read_clip(const std::string& path) {
    if (path == "-") return decode_wav(std::cin, "<stdin>");
    return decode_wav(fs::path(path));
}

struct FeatureFlags {
    std::size_t frame_length = FrameMatrix::kDefaultFrameLength;
    std::size_t hop = FrameMatrix::kDefaultHop;
    std::string window = "hann";
    double roll_percent = 0.85;
    bool no_entropy_norm = false;
    std::string flux = "minmax";
    std::string flux_scope = "record";
    std::string pooling = "frames";
    bool exclude_silent = false;
    std::size_t bins = 20;

    FeatureConfig config() const {
        FeatureConfig cfg;
        cfg.frame_length = frame_length;
        cfg.hop = hop;
        cfg.window = window_from_name(window);
        cfg.roll_percent = roll_percent;
        cfg.entropy_normalized = !no_entropy_norm;
        cfg.flux_normalization = flux == "raw" ? FluxNorm::raw : FluxNorm::record_minmax;
        return cfg;
    }

    GroupOptions options() const {
        GroupOptions opts;
        opts.histogram_bins = bins;
        opts.exclude_silent = exclude_silent;
        opts.pooling = pooling == "clips" ? Pooling::per_clip_mean : Pooling::frames;
        opts.flux_scope = flux_scope == "group" ? FluxScope::group : FluxScope::record;
        return opts;
    }
};

void add_feature_flags(CLI::App* cmd, FeatureFlags& f) {
    cmd->add_option("--frame-length", f.frame_length, "Frame length in samples (power of two)")
        ->capture_default_str();
    cmd->add_option("--hop", f.hop, "Hop between frame starts in samples")
        ->capture_default_str();
    cmd->add_option("--window", f.window, "Analysis window")
        ->check(CLI::IsMember({"hann", "hamming", "rectangular"}))
        ->capture_default_str();
    cmd->add_option("--roll-percent", f.roll_percent, "Roll-off energy fraction in (0, 1]")
        ->capture_default_str();
    cmd->add_flag("--no-entropy-norm", f.no_entropy_norm,
                  "Report entropy in bits instead of normalizing to [0, 1]");
    cmd->add_option("--flux", f.flux, "Flux normalization")
        ->check(CLI::IsMember({"minmax", "raw"}))
        ->capture_default_str();
    cmd->add_option("--flux-scope", f.flux_scope,
                    "Scope of flux min-max normalization")
        ->check(CLI::IsMember({"record", "group"}))
        ->capture_default_str();
    cmd->add_option("--pooling", f.pooling,
                    "Pool frame values across clips, or average per clip first")
        ->check(CLI::IsMember({"frames", "clips"}))
        ->capture_default_str();
    cmd->add_flag("--exclude-silent", f.exclude_silent,
                  "Drop silent-frame values before aggregation");
    cmd->add_option("--bins", f.bins, "Histogram bin count")->capture_default_str();
}

// Per-frame series of one clip, one row per frame. The flux columns describe
// the transition ending at the row's frame, so they are empty on frame 0.
std::string series_csv(const std::vector<std::string>& sources,
                       const std::vector<ExtractionResult>& results) {
    std::string s =
        "clip,source,frame,rolloff,entropy,flatness,flux,flux_raw,zcr,centroid,"
        "bandwidth,silent\n";
    for (std::size_t ci = 0; ci < results.size(); ++ci) {
        const ExtractionResult& r = results[ci];
        for (std::size_t i = 0; i < r.frame_count; ++i) {
            s += std::to_string(ci) + ',' + sources[ci] + ',' + std::to_string(i) + ',';
            s += format_double(r.features.at("rolloff").values[i]) + ',';
            s += format_double(r.features.at("entropy").values[i]) + ',';
            s += format_double(r.features.at("flatness").values[i]) + ',';
            if (i > 0) {
                s += format_double(r.features.at("flux").values[i - 1]) + ',';
                s += format_double(r.flux_raw.values[i - 1]) + ',';
            } else {
                s += ",,";
            }
            s += format_double(r.features.at("zcr").values[i]) + ',';
            s += format_double(r.features.at("centroid").values[i]) + ',';
            s += format_double(r.features.at("bandwidth").values[i]) + ',';
            s += r.silent[i] ? "1\n" : "0\n";
        }
    }
    return s;
}

void write_text_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << content;
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

struct AnalyzeArgs {
    std::vector<std::string> inputs;
    std::string group = "group";
    std::string out_dir = ".";
    std::string format = "csv";
    bool paper_ranges = false;
    bool series = false;
    FeatureFlags flags;
};

int run_analyze(const AnalyzeArgs& a) {
    const std::vector<std::string> paths = expand_inputs(a.inputs);
    std::vector<AudioClip> clips;
    clips.reserve(paths.size());
    for (const std::string& p : paths) clips.push_back(read_clip(p));

    const FeatureConfig cfg = a.flags.config();
    const GroupOptions opts = a.flags.options();
    const GroupReport report = characterize_group(clips, a.group, cfg, opts);

    std::vector<fs::path> written =
        export_report(report, export_format_from_name(a.format), a.out_dir);

    if (a.series) {
        std::vector<std::string> sources;
        std::vector<ExtractionResult> results;
        for (const AudioClip& clip : clips) {
            try {
                results.push_back(extract_all(canonicalize(clip), cfg));
                sources.push_back(clip.source_path());
            } catch (const ClipTooShort&) {
                // already reported as a warning by characterize_group
            }
        }
        const fs::path sp = fs::path(a.out_dir) / (a.group + ".series.csv");
        write_text_file(sp, series_csv(sources, results));
        written.push_back(sp);
    }

    std::cout << format_stats_table(report);
    if (a.paper_ranges) std::cout << '\n' << format_reference_tables();
    for (const fs::path& p : written) std::cout << "wrote " << p.string() << '\n';
    return 0;
}

struct CompareArgs {
    std::vector<std::string> reports;
    std::vector<std::string> sets;
    std::string out_dir = ".";
    std::string format = "csv";
    bool paper_ranges = false;
    FeatureFlags flags;
};

int run_compare(const CompareArgs& a) {
    std::vector<GroupReport> groups;
    if (!a.reports.empty()) {
        for (const std::string& path : expand_inputs(a.reports)) {
            groups.push_back(load_group_report(path));
        }
    }
    for (const std::string& set : a.sets) {
        const std::size_t eq = set.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == set.size()) {
            throw InvalidArgument("--set expects LABEL=PATTERN, got: " + set);
        }
        const std::string label = set.substr(0, eq);
        std::vector<AudioClip> clips;
        for (const std::string& p : expand_inputs({set.substr(eq + 1)})) {
            clips.push_back(read_clip(p));
        }
        groups.push_back(
            characterize_group(clips, label, a.flags.config(), a.flags.options()));
    }

    const ComparisonReport cmp = compare_groups(std::move(groups), a.paper_ranges);
    const std::vector<fs::path> written =
        export_report(cmp, export_format_from_name(a.format), a.out_dir);

    for (const GroupReport& g : cmp.groups) std::cout << format_stats_table(g) << '\n';
    std::cout << format_orderings(cmp);
    for (const fs::path& p : written) std::cout << "wrote " << p.string() << '\n';
    return 0;
}

struct SynthArgs {
    std::string kind;
    std::string out = "-";
    double rate = kCanonicalRate;
    double dur = 1.0;
    double freq = 1000.0;
    std::uint64_t seed = 0;
    double decay = 0.1;
    double onset_silence = 0.02;
    double fundamental = 150.0;
    int harmonics = 6;
};

int run_synth(const SynthArgs& a) {
    SynthSpec spec;
    spec.kind = synth_kind_from_name(a.kind);
    spec.sample_rate = a.rate;
    spec.duration = a.dur;
    spec.frequency = a.freq;
    spec.seed = a.seed;
    spec.decay = a.decay;
    spec.onset_silence = a.onset_silence;
    spec.fundamental = a.fundamental;
    spec.harmonics = a.harmonics;

    const AudioClip clip = synth(spec);
    if (a.out == "-") {
        write_wav16(clip, std::cout);
        std::cout.flush();
        if (!std::cout) throw IoError("write to standard output failed");
    } else {
        write_wav16(clip, fs::path(a.out));
        std::cerr << "wrote " << a.out << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frame-level spectral descriptors for short audio recordings"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "Characterize a labeled group of WAV recordings");
    analyze->add_option("inputs", analyze_args.inputs,
                        "WAV files, glob patterns, or - for standard input")
        ->required();
    analyze->add_option("--group", analyze_args.group, "Group label for the report")
        ->capture_default_str();
    analyze->add_option("--out", analyze_args.out_dir, "Output directory")
        ->capture_default_str();
    analyze->add_option("--format", analyze_args.format, "Export format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    analyze->add_flag("--paper-ranges", analyze_args.paper_ranges,
                      "Print the bundled reference ranges after the table");
    analyze->add_flag("--series", analyze_args.series,
                      "Also write the per-frame series (<group>.series.csv)");
    add_feature_flags(analyze, analyze_args.flags);

    CompareArgs compare_args;
    CLI::App* compare =
        app.add_subcommand("compare", "Rank two or more groups per descriptor");
    compare->add_option("reports", compare_args.reports,
                        "Previously exported .report.json files");
    compare->add_option("--set", compare_args.sets,
                        "Inline group as LABEL=PATTERN (repeatable)");
    compare->add_option("--out", compare_args.out_dir, "Output directory")
        ->capture_default_str();
    compare->add_option("--format", compare_args.format, "Export format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    compare->add_flag("--paper-ranges", compare_args.paper_ranges,
                      "Attach the bundled reference ranges to output and exports");
    add_feature_flags(compare, compare_args.flags);

    SynthArgs synth_args;
    CLI::App* synth_cmd =
        app.add_subcommand("synth", "Generate a deterministic test signal");
    synth_cmd
        ->add_option("kind", synth_args.kind,
                     "One of sine, white_noise, cough_burst, vowel")
        ->required()
        ->check(CLI::IsMember({"sine", "white_noise", "cough_burst", "vowel"}));
    synth_cmd->add_option("--out", synth_args.out, "Output WAV path, - for standard output")
        ->capture_default_str();
    synth_cmd->add_option("--rate", synth_args.rate, "Sample rate in Hz")
        ->capture_default_str();
    synth_cmd->add_option("--dur", synth_args.dur, "Duration in seconds")
        ->capture_default_str();
    synth_cmd->add_option("--freq", synth_args.freq, "Sine frequency in Hz")
        ->capture_default_str();
    synth_cmd->add_option("--seed", synth_args.seed, "Noise seed")->capture_default_str();
    synth_cmd->add_option("--decay", synth_args.decay, "Burst decay constant in seconds")
        ->capture_default_str();
    synth_cmd
        ->add_option("--onset-silence", synth_args.onset_silence,
                     "Leading silence before the burst in seconds")
        ->capture_default_str();
    synth_cmd->add_option("--fundamental", synth_args.fundamental,
                          "Vowel fundamental in Hz")
        ->capture_default_str();
    synth_cmd->add_option("--harmonics", synth_args.harmonics, "Vowel harmonic count")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return run_analyze(analyze_args);
        if (*compare) return run_compare(compare_args);
        if (*synth_cmd) return run_synth(synth_args);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const MalformedFile& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const UnsupportedFormat& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const EmptyAudio& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
