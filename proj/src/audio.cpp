#include "coughsig/audio.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "coughsig/errors.hpp"

namespace coughsig {

AudioClip::AudioClip(std::vector<double> samples, double sample_rate,
                     std::string source_path, std::optional<std::string> group_label)
    : samples_(std::move(samples)),
      sample_rate_(sample_rate),
      source_path_(std::move(source_path)),
      group_label_(std::move(group_label)) {
    if (samples_.empty()) {
        throw EmptyAudio("audio clip has no samples (" + source_path_ + ")");
    }
    if (!(sample_rate_ > 0.0) || !std::isfinite(sample_rate_)) {
        throw InvalidArgument("sample rate must be positive and finite");
    }
    for (double s : samples_) {
        if (!std::isfinite(s) || s < -1.0 || s > 1.0) {
            throw InvalidArgument("sample out of [-1, 1] in " +
                                  (source_path_.empty() ? std::string("<memory>") : source_path_));
        }
    }
}

AudioClip AudioClip::with_label(std::string label) const {
    return AudioClip(samples_, sample_rate_, source_path_, std::move(label));
}

namespace {

double sinc(double x) {
    if (x == 0.0) return 1.0;
    const double px = M_PI * x;
    return std::sin(px) / px;
}

// Blackman window over [-half_width, half_width].
double blackman(double x, double half_width) {
    const double u = x / half_width;  // in [-1, 1]
    return 0.42 + 0.5 * std::cos(M_PI * u) + 0.08 * std::cos(2.0 * M_PI * u);
}

} // namespace

AudioClip resample(const AudioClip& clip, double target_rate) {
    if (!(target_rate > 0.0) || !std::isfinite(target_rate)) {
        throw InvalidArgument("target rate must be positive and finite");
    }
    if (target_rate == clip.sample_rate()) {
        return clip;
    }

    const double ratio = target_rate / clip.sample_rate();
    const auto n_in = static_cast<std::ptrdiff_t>(clip.size());
    const auto n_out = std::max<std::ptrdiff_t>(
        1, static_cast<std::ptrdiff_t>(std::llround(static_cast<double>(n_in) * ratio)));

    // Anti-aliasing cutoff just below the narrower Nyquist, in cycles per
    // input sample. The kernel support stretches by 1/cutoff when
    // downsampling so the transition band stays proportional.
    const double cutoff = 0.5 * std::min(1.0, ratio) * 0.95;
    const double half_width = std::ceil(32.0 / (2.0 * cutoff));

    const std::vector<double>& x = clip.samples();
    std::vector<double> out(static_cast<std::size_t>(n_out));
    for (std::ptrdiff_t m = 0; m < n_out; ++m) {
        const double t = static_cast<double>(m) / ratio;  // position in input samples
        const auto j0 = static_cast<std::ptrdiff_t>(std::ceil(t - half_width));
        const auto j1 = static_cast<std::ptrdiff_t>(std::floor(t + half_width));
        double acc = 0.0;
        for (std::ptrdiff_t j = std::max<std::ptrdiff_t>(0, j0);
             j <= std::min(n_in - 1, j1); ++j) {
            const double u = t - static_cast<double>(j);
            acc += x[static_cast<std::size_t>(j)] * 2.0 * cutoff * sinc(2.0 * cutoff * u) *
                   blackman(u, half_width);
        }
        out[static_cast<std::size_t>(m)] = std::clamp(acc, -1.0, 1.0);
    }

    return AudioClip(std::move(out), target_rate, clip.source_path(), clip.group_label());
}

AudioClip canonicalize(const AudioClip& clip) {
    return resample(clip, kCanonicalRate);
}

} // namespace coughsig
