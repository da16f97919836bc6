#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "coughsig/framing.hpp"
#include "coughsig/spectrum.hpp"

namespace coughsig {

// The seven frame-level descriptors, in report row order.
struct AttributeInfo {
    const char* name;
    const char* display;
    const char* unit;  // empty for dimensionless
};

inline constexpr std::array<AttributeInfo, 7> kAttributes = {{
    {"rolloff", "Spectral Roll-off (in Hz)", "Hz"},
    {"entropy", "Spectral Entropy", ""},
    {"flatness", "Spectral Flatness", ""},
    {"flux", "Spectral Flux", ""},
    {"zcr", "Zero Crossing Rate", ""},
    {"centroid", "Spectral Centroid (Hz)", "Hz"},
    {"bandwidth", "Spectral Bandwidth (Hz)", "Hz"},
}};

const AttributeInfo& attribute_info(std::string_view name);

enum class FluxNorm {
    record_minmax,  // affinely map each record's flux series onto [0, 1]
    raw,            // keep raw squared differences (range [0, 2])
};

// Knobs for the extraction pipeline. Defaults reproduce the standard
// analysis setup: 22050 Hz clips, 512-sample Hann frames, 50% overlap,
// 85% roll percent.
struct FeatureConfig {
    std::size_t frame_length = 512;
    std::size_t hop = 256;
    Window window = Window::hann;
    double roll_percent = 0.85;       // fraction of total power
    double zcr_epsilon_rel = 1e-4;    // threshold as a fraction of the frame peak
    double flatness_floor = 1e-12;    // power floor for the geometric mean
    bool entropy_normalized = true;   // divide by log2(bin_count)
    FluxNorm flux_normalization = FluxNorm::record_minmax;
};

// Per-frame values of one descriptor across a clip. flux has one value per
// consecutive frame pair (frame_count - 1).
struct FeatureSeries {
    std::string name;
    std::string unit;
    std::vector<double> values;
};

// Output of extract_all: the seven named series plus the per-frame silence
// mask and the un-normalized flux series.
struct ExtractionResult {
    std::map<std::string, FeatureSeries> features;
    FeatureSeries flux_raw;
    std::vector<bool> silent;  // one flag per frame; silent frames carry the
                               // conventional descriptor values (all zero)
    std::size_t frame_count = 0;
};

// --- single-spectrum descriptors -----------------------------------------
// All of these throw SilentFrame when the spectrum has zero total power;
// extract_all substitutes the silent-frame conventions instead.

// Lowest bin frequency at which the cumulative power (from DC) reaches
// roll_percent of the total.
double spectral_rolloff(const PowerSpectrum& spec, double roll_percent);

// Shannon entropy of the power distribution over bins, in bits; when
// normalized, divided by log2(bin_count) so the value lies in [0, 1].
double spectral_entropy(const PowerSpectrum& spec, bool normalized);

// Geometric over arithmetic mean of the power bins. Bins are clamped below
// by `floor` inside the geometric mean only; the result is clipped to [0, 1].
double spectral_flatness(const PowerSpectrum& spec, double floor);

// Power-weighted mean bin frequency.
double spectral_centroid(const PowerSpectrum& spec);

// Power-weighted mean absolute deviation of bin frequency about the
// centroid (first-order spread, not RMS).
double spectral_bandwidth(const PowerSpectrum& spec, double centroid);

// --- time-domain / frame-pair descriptors --------------------------------

// Fraction of consecutive-sample pairs with strictly opposite signs where
// both magnitudes exceed epsilon_rel * max|s|; divided by the frame length.
// An all-zero frame yields 0.
double zero_crossing_rate(std::span<const double> raw_frame, double epsilon_rel);

// Raw flux between two spectra: sum of squared differences of their
// unit-sum normalized magnitudes. Spectra with zero total magnitude use the
// uniform distribution.
double spectral_flux_step(const PowerSpectrum& prev, const PowerSpectrum& cur);

// Flux series over a whole frame matrix (length frame_count - 1). Throws
// TooFewFrames for fewer than two frames. With FluxNorm::record_minmax the
// series is affinely mapped so min -> 0 and max -> 1; a constant series
// maps to all zeros.
FeatureSeries spectral_flux(const FrameMatrix& frames,
                            FluxNorm normalization = FluxNorm::record_minmax);

// --- pipeline -------------------------------------------------------------

// Frame the clip, compute per-frame spectra and all seven descriptor
// series. Deterministic: fixed-order reductions, independent of scheduling.
ExtractionResult extract_all(const AudioClip& clip, const FeatureConfig& config = {});

} // namespace coughsig
