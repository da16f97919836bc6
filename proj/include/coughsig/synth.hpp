#pragma once

#include <cstdint>
#include <string_view>

#include "coughsig/audio.hpp"

namespace coughsig {

// Deterministic test-signal generator. Every kind is pure given the spec:
// the same spec (including seed) always produces identical samples.
struct SynthSpec {
    enum class Kind { sine, white_noise, cough_burst, vowel };

    Kind kind = Kind::sine;
    double sample_rate = kCanonicalRate;
    double duration = 1.0;  // seconds; at least one frame (512 samples)

    double frequency = 1000.0;   // sine
    std::uint64_t seed = 0;      // white_noise, cough_burst
    double decay = 0.1;          // cough_burst envelope time constant, seconds
    double onset_silence = 0.02; // cough_burst leading silence, seconds
    double fundamental = 150.0;  // vowel
    int harmonics = 6;           // vowel, amplitudes 1/h
};

SynthSpec::Kind synth_kind_from_name(std::string_view name);
std::string_view synth_kind_name(SynthSpec::Kind kind);

// sine:        0.8 * sin(2*pi*f*n/sr)
// white_noise: uniform in [-0.8, 0.8] from a seeded SplitMix64 stream
// cough_burst: leading silence, then seeded noise shaped by exp(-t/decay)
// vowel:       harmonics of the fundamental with 1/h amplitudes, peak
//              scaled to 0.8
AudioClip synth(const SynthSpec& spec);

namespace detail {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed constants, trivially portable,
// so seeded streams reproduce across implementations.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [-amplitude, amplitude).
    double next_symmetric(double amplitude) {
        return amplitude * (2.0 * next_double() - 1.0);
    }

  private:
    std::uint64_t state_;
};

} // namespace detail
} // namespace coughsig
