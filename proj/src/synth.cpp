#include "coughsig/synth.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "coughsig/errors.hpp"
#include "coughsig/framing.hpp"

namespace coughsig {

SynthSpec::Kind synth_kind_from_name(std::string_view name) {
    if (name == "sine") return SynthSpec::Kind::sine;
    if (name == "white_noise") return SynthSpec::Kind::white_noise;
    if (name == "cough_burst") return SynthSpec::Kind::cough_burst;
    if (name == "vowel") return SynthSpec::Kind::vowel;
    throw InvalidSpec("unknown synth kind: " + std::string(name));
}

std::string_view synth_kind_name(SynthSpec::Kind kind) {
    switch (kind) {
        case SynthSpec::Kind::sine: return "sine";
        case SynthSpec::Kind::white_noise: return "white_noise";
        case SynthSpec::Kind::cough_burst: return "cough_burst";
        case SynthSpec::Kind::vowel: return "vowel";
    }
    throw InvalidSpec("unknown synth kind");
}

namespace {

void validate(const SynthSpec& spec, std::size_t n_samples) {
    if (!(spec.sample_rate > 0.0)) throw InvalidSpec("sample_rate must be positive");
    if (!(spec.duration > 0.0)) throw InvalidSpec("duration must be positive");
    if (n_samples < FrameMatrix::kDefaultFrameLength) {
        throw InvalidSpec("duration must cover at least one frame (" +
                          std::to_string(FrameMatrix::kDefaultFrameLength) + " samples)");
    }
    switch (spec.kind) {
        case SynthSpec::Kind::sine:
            if (!(spec.frequency > 0.0)) throw InvalidSpec("frequency must be positive");
            if (spec.frequency >= spec.sample_rate / 2.0) {
                throw InvalidSpec("frequency must be below the Nyquist rate");
            }
            break;
        case SynthSpec::Kind::white_noise:
            break;
        case SynthSpec::Kind::cough_burst:
            if (!(spec.decay > 0.0)) throw InvalidSpec("decay must be positive");
            if (spec.onset_silence < 0.0 || spec.onset_silence >= spec.duration) {
                throw InvalidSpec("onset_silence must be in [0, duration)");
            }
            break;
        case SynthSpec::Kind::vowel:
            if (!(spec.fundamental > 0.0)) throw InvalidSpec("fundamental must be positive");
            if (spec.harmonics < 1) throw InvalidSpec("harmonics must be at least 1");
            break;
    }
}

} // namespace

AudioClip synth(const SynthSpec& spec) {
    const auto n = static_cast<std::size_t>(std::llround(spec.duration * spec.sample_rate));
    validate(spec, n);

    constexpr double kAmplitude = 0.8;  // headroom for window/resample round trips
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> samples(n, 0.0);

    switch (spec.kind) {
        case SynthSpec::Kind::sine: {
            const double step = two_pi * spec.frequency / spec.sample_rate;
            for (std::size_t i = 0; i < n; ++i) {
                samples[i] = kAmplitude * std::sin(step * static_cast<double>(i));
            }
            break;
        }
        case SynthSpec::Kind::white_noise: {
            detail::SplitMix64 rng(spec.seed);
            for (std::size_t i = 0; i < n; ++i) samples[i] = rng.next_symmetric(kAmplitude);
            break;
        }
        case SynthSpec::Kind::cough_burst: {
            detail::SplitMix64 rng(spec.seed);
            const auto silence =
                static_cast<std::size_t>(std::llround(spec.onset_silence * spec.sample_rate));
            const double tau = spec.decay * spec.sample_rate;
            for (std::size_t i = silence; i < n; ++i) {
                const double t = static_cast<double>(i - silence);
                samples[i] = rng.next_symmetric(kAmplitude) * std::exp(-t / tau);
            }
            break;
        }
        case SynthSpec::Kind::vowel: {
            double peak = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                double s = 0.0;
                for (int h = 1; h <= spec.harmonics; ++h) {
                    s += std::sin(two_pi * spec.fundamental * h * static_cast<double>(i) /
                                  spec.sample_rate) /
                         static_cast<double>(h);
                }
                samples[i] = s;
                peak = std::max(peak, std::abs(s));
            }
            if (peak > 0.0) {
                for (double& s : samples) s *= kAmplitude / peak;
            }
            break;
        }
    }

    return AudioClip(std::move(samples), spec.sample_rate,
                     "synth:" + std::string(synth_kind_name(spec.kind)));
}

} // namespace coughsig
