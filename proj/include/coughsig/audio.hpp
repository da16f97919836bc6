#pragma once

#include <optional>
#include <string>
#include <vector>

namespace coughsig {

inline constexpr double kCanonicalRate = 22050.0;

// Mono audio clip with amplitudes normalized to [-1, 1].
//
// Construction validates the invariants (non-empty, positive rate, samples
// in range); everything downstream may assume they hold.
class AudioClip {
  public:
    AudioClip(std::vector<double> samples, double sample_rate,
              std::string source_path = {},
              std::optional<std::string> group_label = std::nullopt);

    const std::vector<double>& samples() const { return samples_; }
    double sample_rate() const { return sample_rate_; }
    const std::string& source_path() const { return source_path_; }
    const std::optional<std::string>& group_label() const { return group_label_; }
    std::size_t size() const { return samples_.size(); }
    double duration() const { return static_cast<double>(samples_.size()) / sample_rate_; }

    AudioClip with_label(std::string label) const;

  private:
    std::vector<double> samples_;
    double sample_rate_ = 0.0;
    std::string source_path_;
    std::optional<std::string> group_label_;
};

// Band-limited resampling (windowed-sinc interpolation). Output length is
// round(n * target_rate / source_rate); samples are re-clamped to [-1, 1].
// Returns the input unchanged when the rates already match.
AudioClip resample(const AudioClip& clip, double target_rate);

// Resample to the canonical 22050 Hz analysis rate.
AudioClip canonicalize(const AudioClip& clip);

} // namespace coughsig
