#include "coughsig/features.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coughsig/errors.hpp"

namespace coughsig {

const AttributeInfo& attribute_info(std::string_view name) {
    for (const auto& a : kAttributes) {
        if (name == a.name) return a;
    }
    throw InvalidArgument("unknown attribute: " + std::string(name));
}

namespace {

double checked_total(const PowerSpectrum& spec) {
    const double total = spec.total_power();
    if (!(total > 0.0)) throw SilentFrame("spectrum has zero total power");
    return total;
}

// Unit-sum normalized magnitudes; uniform distribution for silent spectra.
std::vector<double> flux_distribution(const PowerSpectrum& spec) {
    const std::size_t n = spec.bin_count();
    double total = 0.0;
    for (double m : spec.magnitude) total += m;
    std::vector<double> e(n);
    if (total > 0.0) {
        for (std::size_t k = 0; k < n; ++k) e[k] = spec.magnitude[k] / total;
    } else {
        std::fill(e.begin(), e.end(), 1.0 / static_cast<double>(n));
    }
    return e;
}

void apply_minmax(std::vector<double>& values) {
    auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it, hi = *hi_it;
    if (hi > lo) {
        for (double& v : values) v = (v - lo) / (hi - lo);
    } else {
        std::fill(values.begin(), values.end(), 0.0);
    }
}

} // namespace

double spectral_rolloff(const PowerSpectrum& spec, double roll_percent) {
    if (!(roll_percent > 0.0) || roll_percent > 1.0) {
        throw InvalidArgument("roll_percent must be in (0, 1]");
    }
    const double threshold = roll_percent * checked_total(spec);
    double cumulative = 0.0;
    for (std::size_t k = 0; k < spec.bin_count(); ++k) {
        cumulative += spec.power[k];
        if (cumulative >= threshold) return spec.bin_freq[k];
    }
    return spec.bin_freq.back();  // rounding left us just short of the threshold
}

double spectral_entropy(const PowerSpectrum& spec, bool normalized) {
    const double total = checked_total(spec);
    double entropy = 0.0;
    for (double p : spec.power) {
        if (p > 0.0) {
            const double q = p / total;
            entropy -= q * std::log2(q);
        }
    }
    if (normalized) entropy /= std::log2(static_cast<double>(spec.bin_count()));
    return entropy;
}

double spectral_flatness(const PowerSpectrum& spec, double floor) {
    if (!(floor > 0.0)) throw InvalidArgument("flatness floor must be positive");
    const std::size_t n = spec.bin_count();
    double arith = 0.0;
    double log_sum = 0.0;
    for (double p : spec.power) {
        arith += p;
        log_sum += std::log(std::max(p, floor));
    }
    if (!(arith > 0.0)) throw SilentFrame("spectrum has zero total power");
    arith /= static_cast<double>(n);
    const double geo = std::exp(log_sum / static_cast<double>(n));
    return std::clamp(geo / arith, 0.0, 1.0);
}

double spectral_centroid(const PowerSpectrum& spec) {
    const double total = checked_total(spec);
    double weighted = 0.0;
    for (std::size_t k = 0; k < spec.bin_count(); ++k) {
        weighted += spec.bin_freq[k] * spec.power[k];
    }
    return weighted / total;
}

double spectral_bandwidth(const PowerSpectrum& spec, double centroid) {
    const double total = checked_total(spec);
    double spread = 0.0;
    for (std::size_t k = 0; k < spec.bin_count(); ++k) {
        spread += std::abs(spec.bin_freq[k] - centroid) * spec.power[k];
    }
    return spread / total;
}

double zero_crossing_rate(std::span<const double> raw_frame, double epsilon_rel) {
    const std::size_t n = raw_frame.size();
    if (n < 2) throw InvalidArgument("zero_crossing_rate needs at least two samples");
    double peak = 0.0;
    for (double s : raw_frame) peak = std::max(peak, std::abs(s));
    if (peak == 0.0) return 0.0;
    const double eps = epsilon_rel * peak;
    std::size_t crossings = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const double a = raw_frame[i - 1];
        const double b = raw_frame[i];
        if (std::abs(a) > eps && std::abs(b) > eps &&
            ((a > 0.0 && b < 0.0) || (a < 0.0 && b > 0.0))) {
            ++crossings;
        }
    }
    return static_cast<double>(crossings) / static_cast<double>(n);
}

double spectral_flux_step(const PowerSpectrum& prev, const PowerSpectrum& cur) {
    if (prev.bin_count() != cur.bin_count()) {
        throw InvalidArgument("flux spectra must have matching bin counts");
    }
    const std::vector<double> a = flux_distribution(prev);
    const std::vector<double> b = flux_distribution(cur);
    double flux = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = b[k] - a[k];
        flux += d * d;
    }
    return flux;
}

namespace {

std::vector<double> flux_series_raw(const std::vector<PowerSpectrum>& spectra) {
    std::vector<double> raw(spectra.size() - 1);
    std::vector<double> prev = flux_distribution(spectra[0]);
    for (std::size_t i = 1; i < spectra.size(); ++i) {
        std::vector<double> cur = flux_distribution(spectra[i]);
        double flux = 0.0;
        for (std::size_t k = 0; k < cur.size(); ++k) {
            const double d = cur[k] - prev[k];
            flux += d * d;
        }
        raw[i - 1] = flux;
        prev = std::move(cur);
    }
    return raw;
}

} // namespace

FeatureSeries spectral_flux(const FrameMatrix& frames, FluxNorm normalization) {
    if (frames.frame_count() < 2) {
        throw TooFewFrames("spectral flux needs at least two frames");
    }
    std::vector<PowerSpectrum> spectra;
    spectra.reserve(frames.frame_count());
    for (std::size_t i = 0; i < frames.frame_count(); ++i) {
        spectra.push_back(power_spectrum(frames.windowed(i), frames.sample_rate()));
    }
    FeatureSeries series{"flux", "", flux_series_raw(spectra)};
    if (normalization == FluxNorm::record_minmax) apply_minmax(series.values);
    return series;
}

ExtractionResult extract_all(const AudioClip& clip, const FeatureConfig& config) {
    if (!(config.roll_percent > 0.0) || config.roll_percent > 1.0) {
        throw InvalidArgument("roll_percent must be in (0, 1]");
    }
    if (!(config.flatness_floor > 0.0) || !(config.zcr_epsilon_rel >= 0.0)) {
        throw InvalidArgument("flatness_floor must be positive, zcr_epsilon_rel non-negative");
    }

    const FrameMatrix frames =
        frame_signal(clip, config.frame_length, config.hop, config.window);
    const std::size_t n = frames.frame_count();

    ExtractionResult out;
    out.frame_count = n;
    out.silent.assign(n, false);

    std::vector<double> rolloff(n), entropy(n), flatness(n), zcr(n), centroid(n), bandwidth(n);
    std::vector<PowerSpectrum> spectra;
    spectra.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        spectra.push_back(power_spectrum(frames.windowed(i), frames.sample_rate()));
        const bool silent = !(spectra[i].total_power() > 0.0);
        out.silent[i] = silent;
        if (silent) {
            rolloff[i] = entropy[i] = flatness[i] = centroid[i] = bandwidth[i] = 0.0;
        } else {
            rolloff[i] = spectral_rolloff(spectra[i], config.roll_percent);
            entropy[i] = spectral_entropy(spectra[i], config.entropy_normalized);
            flatness[i] = spectral_flatness(spectra[i], config.flatness_floor);
            centroid[i] = spectral_centroid(spectra[i]);
            bandwidth[i] = spectral_bandwidth(spectra[i], centroid[i]);
        }
        zcr[i] = zero_crossing_rate(frames.raw(i), config.zcr_epsilon_rel);
    }

    std::vector<double> flux_raw =
        n >= 2 ? flux_series_raw(spectra) : std::vector<double>{};
    out.flux_raw = FeatureSeries{"flux_raw", "", flux_raw};
    if (config.flux_normalization == FluxNorm::record_minmax && !flux_raw.empty()) {
        apply_minmax(flux_raw);
    }

    out.features.emplace("rolloff", FeatureSeries{"rolloff", "Hz", std::move(rolloff)});
    out.features.emplace("entropy", FeatureSeries{"entropy", "", std::move(entropy)});
    out.features.emplace("flatness", FeatureSeries{"flatness", "", std::move(flatness)});
    out.features.emplace("flux", FeatureSeries{"flux", "", std::move(flux_raw)});
    out.features.emplace("zcr", FeatureSeries{"zcr", "", std::move(zcr)});
    out.features.emplace("centroid", FeatureSeries{"centroid", "Hz", std::move(centroid)});
    out.features.emplace("bandwidth", FeatureSeries{"bandwidth", "Hz", std::move(bandwidth)});
    return out;
}

} // namespace coughsig
