#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "coughsig/audio.hpp"

namespace coughsig {

enum class Window { hann, hamming, rectangular };

std::string_view window_name(Window w);
Window window_from_name(std::string_view name);

// Window coefficients of the given length (periodic form).
std::vector<double> make_window(Window kind, std::size_t length);

// Overlapping analysis frames of a clip.
//
// Frame i covers samples [i*hop, i*hop + frame_length). Trailing samples
// that cannot fill a frame are dropped. Both the windowed frame (for
// spectral descriptors) and the raw frame (for the zero-crossing rate)
// are kept.
class FrameMatrix {
  public:
    static constexpr std::size_t kDefaultFrameLength = 512;
    static constexpr std::size_t kDefaultHop = 256;

    std::size_t frame_count() const { return frame_count_; }
    std::size_t frame_length() const { return frame_length_; }
    std::size_t hop() const { return hop_; }
    Window window_kind() const { return window_kind_; }
    double sample_rate() const { return sample_rate_; }
    const std::vector<double>& window() const { return window_; }

    std::span<const double> windowed(std::size_t i) const {
        return {windowed_.data() + i * frame_length_, frame_length_};
    }
    std::span<const double> raw(std::size_t i) const {
        return {raw_.data() + i * frame_length_, frame_length_};
    }

    friend FrameMatrix frame_signal(const AudioClip&, std::size_t, std::size_t, Window);

  private:
    std::size_t frame_length_ = 0;
    std::size_t hop_ = 0;
    std::size_t frame_count_ = 0;
    Window window_kind_ = Window::hann;
    double sample_rate_ = 0.0;
    std::vector<double> window_;
    std::vector<double> windowed_;  // frame_count * frame_length, row-major
    std::vector<double> raw_;
};

// Throws ClipTooShort when the clip has fewer samples than frame_length.
FrameMatrix frame_signal(const AudioClip& clip,
                         std::size_t frame_length = FrameMatrix::kDefaultFrameLength,
                         std::size_t hop = FrameMatrix::kDefaultHop,
                         Window window = Window::hann);

} // namespace coughsig
