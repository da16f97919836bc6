// Python bindings for the main pipeline operations. Enum-like knobs are
// taken as strings and converted; errors surface as coughsig.Error
// subclasses.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "coughsig/audio.hpp"
#include "coughsig/errors.hpp"
#include "coughsig/features.hpp"
#include "coughsig/reference.hpp"
#include "coughsig/report.hpp"
#include "coughsig/stats.hpp"
#include "coughsig/synth.hpp"
#include "coughsig/wav.hpp"

namespace py = pybind11;
using namespace coughsig;

namespace {

FeatureConfig make_config(std::size_t frame_length, std::size_t hop,
                          const std::string& window, double roll_percent,
                          bool entropy_norm, const std::string& flux) {
    FeatureConfig cfg;
    cfg.frame_length = frame_length;
    cfg.hop = hop;
    cfg.window = window_from_name(window);
    cfg.roll_percent = roll_percent;
    cfg.entropy_normalized = entropy_norm;
    if (flux == "minmax") {
        cfg.flux_normalization = FluxNorm::record_minmax;
    } else if (flux == "raw") {
        cfg.flux_normalization = FluxNorm::raw;
    } else {
        throw InvalidArgument("flux must be minmax or raw, got " + flux);
    }
    return cfg;
}

GroupOptions make_options(std::size_t bins, bool exclude_silent,
                          const std::string& pooling, const std::string& flux_scope) {
    GroupOptions opts;
    opts.histogram_bins = bins;
    opts.exclude_silent = exclude_silent;
    if (pooling == "frames") {
        opts.pooling = Pooling::frames;
    } else if (pooling == "clips") {
        opts.pooling = Pooling::per_clip_mean;
    } else {
        throw InvalidArgument("pooling must be frames or clips, got " + pooling);
    }
    if (flux_scope == "record") {
        opts.flux_scope = FluxScope::record;
    } else if (flux_scope == "group") {
        opts.flux_scope = FluxScope::group;
    } else {
        throw InvalidArgument("flux_scope must be record or group, got " + flux_scope);
    }
    return opts;
}

py::dict stats_dict(const SummaryStats& s) {
    py::dict d;
    d["min"] = s.min;
    d["max"] = s.max;
    d["mean"] = s.mean;
    d["p25"] = s.p25;
    d["median"] = s.median;
    d["p75"] = s.p75;
    d["std"] = s.std_dev;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Frame-level spectral descriptors for short audio recordings";

    auto err = py::register_exception<Error>(m, "Error");
    py::register_exception<MalformedFile>(m, "MalformedFile", err);
    py::register_exception<UnsupportedFormat>(m, "UnsupportedFormat", err);
    py::register_exception<EmptyAudio>(m, "EmptyAudio", err);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", err);
    py::register_exception<ClipTooShort>(m, "ClipTooShort", err);
    py::register_exception<InvalidFrameLength>(m, "InvalidFrameLength", err);
    py::register_exception<SilentFrame>(m, "SilentFrame", err);
    py::register_exception<TooFewFrames>(m, "TooFewFrames", err);
    py::register_exception<EmptyInput>(m, "EmptyInput", err);
    py::register_exception<InvalidRange>(m, "InvalidRange", err);
    py::register_exception<EmptyGroup>(m, "EmptyGroup", err);
    py::register_exception<DuplicateLabels>(m, "DuplicateLabels", err);
    py::register_exception<IoError>(m, "IoError", err);
    py::register_exception<InvalidSpec>(m, "InvalidSpec", err);

    py::class_<AudioClip>(m, "AudioClip")
        .def(py::init<std::vector<double>, double, std::string,
                      std::optional<std::string>>(),
             py::arg("samples"), py::arg("sample_rate"), py::arg("source_path") = "",
             py::arg("group_label") = py::none())
        .def_property_readonly("samples", &AudioClip::samples)
        .def_property_readonly("sample_rate", &AudioClip::sample_rate)
        .def_property_readonly("source_path", &AudioClip::source_path)
        .def_property_readonly("duration", &AudioClip::duration)
        .def("__len__", &AudioClip::size)
        .def("__repr__", [](const AudioClip& c) {
            return "AudioClip(" + std::to_string(c.size()) + " samples @ " +
                   std::to_string(c.sample_rate()) + " Hz)";
        });

    m.def("decode_wav",
          [](const std::filesystem::path& p) { return decode_wav(p); },
          py::arg("path"), "Decode a RIFF/WAVE file to a mono clip");
    m.def("write_wav",
          [](const AudioClip& clip, const std::filesystem::path& p) {
              write_wav16(clip, p);
          },
          py::arg("clip"), py::arg("path"), "Write a clip as mono 16-bit PCM WAV");
    m.def(
        "resample",
        [](const AudioClip& clip, double target_rate) {
            return resample(clip, target_rate);
        },
        py::arg("clip"), py::arg("target_rate"));
    m.def(
        "canonicalize", [](const AudioClip& clip) { return canonicalize(clip); },
        py::arg("clip"), "Resample to the 22050 Hz analysis rate");

    m.def(
        "synth",
        [](const std::string& kind, double sample_rate, double duration,
           double frequency, std::uint64_t seed, double decay, double onset_silence,
           double fundamental, int harmonics) {
            SynthSpec spec;
            spec.kind = synth_kind_from_name(kind);
            spec.sample_rate = sample_rate;
            spec.duration = duration;
            spec.frequency = frequency;
            spec.seed = seed;
            spec.decay = decay;
            spec.onset_silence = onset_silence;
            spec.fundamental = fundamental;
            spec.harmonics = harmonics;
            return synth(spec);
        },
        py::arg("kind"), py::arg("sample_rate") = kCanonicalRate,
        py::arg("duration") = 1.0, py::arg("frequency") = 1000.0, py::arg("seed") = 0,
        py::arg("decay") = 0.1, py::arg("onset_silence") = 0.02,
        py::arg("fundamental") = 150.0, py::arg("harmonics") = 6,
        "Deterministic test signal: sine, white_noise, cough_burst or vowel");

    m.def(
        "extract",
        [](const AudioClip& clip, std::size_t frame_length, std::size_t hop,
           const std::string& window, double roll_percent, bool entropy_norm,
           const std::string& flux) {
            const ExtractionResult res = extract_all(
                clip,
                make_config(frame_length, hop, window, roll_percent, entropy_norm, flux));
            py::dict d;
            for (const auto& attr : kAttributes) {
                d[attr.name] = res.features.at(attr.name).values;
            }
            d["flux_raw"] = res.flux_raw.values;
            d["silent"] = res.silent;
            d["frame_count"] = res.frame_count;
            return d;
        },
        py::arg("clip"), py::arg("frame_length") = FrameMatrix::kDefaultFrameLength,
        py::arg("hop") = FrameMatrix::kDefaultHop, py::arg("window") = "hann",
        py::arg("roll_percent") = 0.85, py::arg("entropy_norm") = true,
        py::arg("flux") = "minmax",
        "Per-frame descriptor series for one clip, as a dict of lists");

    m.def(
        "summarize",
        [](const std::vector<double>& values) {
            return stats_dict(summarize(values));
        },
        py::arg("values"));
    m.def(
        "percentile",
        [](const std::vector<double>& values, double p) { return percentile(values, p); },
        py::arg("values"), py::arg("p"));
    m.def(
        "histogram",
        [](const std::vector<double>& values, std::size_t bins) {
            const Histogram h = build_histogram(values, bins);
            return py::make_tuple(h.bin_edges, h.counts);
        },
        py::arg("values"), py::arg("bins") = 20,
        "Equal-width histogram; returns (bin_edges, counts)");

    py::class_<GroupReport>(m, "GroupReport")
        .def_readonly("label", &GroupReport::label)
        .def_readonly("clip_count", &GroupReport::clip_count)
        .def_readonly("frame_count", &GroupReport::frame_count)
        .def_readonly("warnings", &GroupReport::warnings)
        .def("attributes",
             [](const GroupReport& r) {
                 std::vector<std::string> names;
                 for (const auto& [name, _] : r.attributes) names.push_back(name);
                 return names;
             })
        .def(
            "stats",
            [](const GroupReport& r, const std::string& attribute) {
                auto it = r.attributes.find(attribute);
                if (it == r.attributes.end()) {
                    throw InvalidArgument("unknown attribute: " + attribute);
                }
                return stats_dict(it->second.stats);
            },
            py::arg("attribute"))
        .def(
            "histogram",
            [](const GroupReport& r, const std::string& attribute) {
                auto it = r.attributes.find(attribute);
                if (it == r.attributes.end()) {
                    throw InvalidArgument("unknown attribute: " + attribute);
                }
                return py::make_tuple(it->second.histogram.bin_edges,
                                      it->second.histogram.counts);
            },
            py::arg("attribute"))
        .def("to_json", [](const GroupReport& r) { return to_json_string(r); })
        .def_static("from_json", &group_report_from_json, py::arg("text"))
        .def("table", &format_stats_table);

    py::class_<ComparisonReport>(m, "ComparisonReport")
        .def_readonly("groups", &ComparisonReport::groups)
        .def("orderings",
             [](const ComparisonReport& r) {
                 py::list out;
                 for (const Ordering& o : r.orderings) {
                     py::dict d;
                     d["attribute"] = o.attribute;
                     d["statistic"] = o.statistic;
                     d["ranking"] = o.ranking;
                     d["tie"] = o.tie;
                     out.append(d);
                 }
                 return out;
             })
        .def("to_json", [](const ComparisonReport& r) { return to_json_string(r); })
        .def("table", &format_orderings);

    m.def(
        "characterize_group",
        [](const std::vector<AudioClip>& clips, const std::string& label,
           std::size_t frame_length, std::size_t hop, const std::string& window,
           double roll_percent, bool entropy_norm, const std::string& flux,
           std::size_t bins, bool exclude_silent, const std::string& pooling,
           const std::string& flux_scope) {
            return characterize_group(
                clips, label,
                make_config(frame_length, hop, window, roll_percent, entropy_norm, flux),
                make_options(bins, exclude_silent, pooling, flux_scope));
        },
        py::arg("clips"), py::arg("label"),
        py::arg("frame_length") = FrameMatrix::kDefaultFrameLength,
        py::arg("hop") = FrameMatrix::kDefaultHop, py::arg("window") = "hann",
        py::arg("roll_percent") = 0.85, py::arg("entropy_norm") = true,
        py::arg("flux") = "minmax", py::arg("bins") = 20,
        py::arg("exclude_silent") = false, py::arg("pooling") = "frames",
        py::arg("flux_scope") = "record",
        "Summary stats and histograms for a labeled group of clips");

    m.def(
        "compare_groups",
        [](std::vector<GroupReport> reports, bool include_reference) {
            return compare_groups(std::move(reports), include_reference);
        },
        py::arg("reports"), py::arg("include_reference") = false);

    m.def(
        "export_report",
        [](const GroupReport& r, const std::string& format,
           const std::filesystem::path& dir) {
            return export_report(r, export_format_from_name(format), dir);
        },
        py::arg("report"), py::arg("format"), py::arg("dir"));
    m.def(
        "export_comparison",
        [](const ComparisonReport& r, const std::string& format,
           const std::filesystem::path& dir) {
            return export_report(r, export_format_from_name(format), dir);
        },
        py::arg("report"), py::arg("format"), py::arg("dir"));
    m.def("load_group_report", &load_group_report, py::arg("path"));

    m.def("reference_tables", []() {
        py::list tables;
        for (const auto& table : reference_tables()) {
            py::dict t;
            t["group"] = std::string(table.group);
            t["title"] = std::string(table.title);
            py::list rows;
            for (const auto& row : table.rows) {
                py::dict r;
                r["attribute"] = std::string(row.attribute);
                r["min"] = row.stats.min;
                r["max"] = row.stats.max;
                r["mean"] = row.stats.mean;
                r["p25"] = row.stats.p25;
                r["median"] = row.stats.median;
                r["p75"] = row.stats.p75;
                r["std"] = row.stats.std_dev;
                rows.append(r);
            }
            t["rows"] = rows;
            tables.append(t);
        }
        return tables;
    });

    m.attr("CANONICAL_RATE") = kCanonicalRate;
    m.attr("ATTRIBUTES") = []() {
        std::vector<std::string> names;
        for (const auto& attr : kAttributes) names.emplace_back(attr.name);
        return names;
    }();
}
