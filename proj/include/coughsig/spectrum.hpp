#pragma once

#include <complex>
#include <span>
#include <vector>

namespace coughsig {

// One-sided power spectrum of a single frame, DC through Nyquist inclusive.
//
// power[k] = |X(k)|^2 / N with X the unnormalized DFT of the N-sample frame,
// so the one-sided sum (interior bins doubled) equals N times the frame's
// mean square. magnitude[k] = sqrt(power[k]).
struct PowerSpectrum {
    std::vector<double> power;
    std::vector<double> magnitude;
    std::vector<double> bin_freq;  // k * sample_rate / N, Hz

    std::size_t bin_count() const { return power.size(); }
    std::size_t frame_length() const { return 2 * (power.size() - 1); }
    double total_power() const;

    // Build a spectrum directly from power values (test fixtures, synthetic
    // spectra). frame_length = 2 * (power.size() - 1).
    static PowerSpectrum from_power(std::vector<double> power, double sample_rate);
};

// DFT of a real frame whose length must be a power of two (>= 2); throws
// InvalidFrameLength otherwise.
PowerSpectrum power_spectrum(std::span<const double> frame, double sample_rate);

namespace detail {
// In-place iterative radix-2 FFT; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data);
bool is_power_of_two(std::size_t n);
} // namespace detail

} // namespace coughsig
