#include "coughsig/framing.hpp"

#include <cmath>
#include <string>

#include "coughsig/errors.hpp"

namespace coughsig {

std::string_view window_name(Window w) {
    switch (w) {
        case Window::hann: return "hann";
        case Window::hamming: return "hamming";
        case Window::rectangular: return "rectangular";
    }
    return "hann";
}

Window window_from_name(std::string_view name) {
    if (name == "hann") return Window::hann;
    if (name == "hamming") return Window::hamming;
    if (name == "rectangular") return Window::rectangular;
    throw InvalidArgument("unknown window: " + std::string(name));
}

std::vector<double> make_window(Window kind, std::size_t length) {
    std::vector<double> w(length, 1.0);
    const double step = 2.0 * M_PI / static_cast<double>(length);
    switch (kind) {
        case Window::hann:
            for (std::size_t n = 0; n < length; ++n)
                w[n] = 0.5 * (1.0 - std::cos(step * static_cast<double>(n)));
            break;
        case Window::hamming:
            for (std::size_t n = 0; n < length; ++n)
                w[n] = 0.54 - 0.46 * std::cos(step * static_cast<double>(n));
            break;
        case Window::rectangular:
            break;
    }
    return w;
}

FrameMatrix frame_signal(const AudioClip& clip, std::size_t frame_length,
                         std::size_t hop, Window window) {
    if (frame_length < 2) throw InvalidArgument("frame_length must be >= 2");
    if (hop < 1 || hop > frame_length) throw InvalidArgument("need 1 <= hop <= frame_length");
    const std::size_t n = clip.size();
    if (n < frame_length) {
        throw ClipTooShort("clip of " + std::to_string(n) + " samples is shorter than one frame (" +
                           std::to_string(frame_length) + ")");
    }

    FrameMatrix fm;
    fm.frame_length_ = frame_length;
    fm.hop_ = hop;
    fm.window_kind_ = window;
    fm.sample_rate_ = clip.sample_rate();
    fm.frame_count_ = (n - frame_length) / hop + 1;
    fm.window_ = make_window(window, frame_length);
    fm.raw_.resize(fm.frame_count_ * frame_length);
    fm.windowed_.resize(fm.frame_count_ * frame_length);

    const std::vector<double>& x = clip.samples();
    for (std::size_t i = 0; i < fm.frame_count_; ++i) {
        const std::size_t base = i * hop;
        double* raw = fm.raw_.data() + i * frame_length;
        double* win = fm.windowed_.data() + i * frame_length;
        for (std::size_t k = 0; k < frame_length; ++k) {
            raw[k] = x[base + k];
            win[k] = raw[k] * fm.window_[k];
        }
    }
    return fm;
}

} // namespace coughsig
