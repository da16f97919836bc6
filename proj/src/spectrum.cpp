#include "coughsig/spectrum.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "coughsig/errors.hpp"

namespace coughsig {

namespace detail {

bool is_power_of_two(std::size_t n) {
    return n >= 2 && (n & (n - 1)) == 0;
}

void fft_radix2(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * M_PI / static_cast<double>(len);
        const std::complex<double> wbase(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wbase;
            }
        }
    }
}

} // namespace detail

double PowerSpectrum::total_power() const {
    return std::accumulate(power.begin(), power.end(), 0.0);
}

PowerSpectrum PowerSpectrum::from_power(std::vector<double> power, double sample_rate) {
    if (power.size() < 2) throw InvalidArgument("need at least two bins");
    PowerSpectrum spec;
    const std::size_t frame_length = 2 * (power.size() - 1);
    spec.magnitude.resize(power.size());
    spec.bin_freq.resize(power.size());
    for (std::size_t k = 0; k < power.size(); ++k) {
        spec.magnitude[k] = std::sqrt(power[k]);
        spec.bin_freq[k] = static_cast<double>(k) * sample_rate / static_cast<double>(frame_length);
    }
    spec.power = std::move(power);
    return spec;
}

PowerSpectrum power_spectrum(std::span<const double> frame, double sample_rate) {
    const std::size_t n = frame.size();
    if (!detail::is_power_of_two(n)) {
        throw InvalidFrameLength("frame length " + std::to_string(n) +
                                 " is not a power of two");
    }

    std::vector<std::complex<double>> buf(n);
    for (std::size_t i = 0; i < n; ++i) buf[i] = frame[i];
    detail::fft_radix2(buf);

    const std::size_t bins = n / 2 + 1;
    PowerSpectrum spec;
    spec.power.resize(bins);
    spec.magnitude.resize(bins);
    spec.bin_freq.resize(bins);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t k = 0; k < bins; ++k) {
        spec.power[k] = std::norm(buf[k]) * inv_n;
        spec.magnitude[k] = std::sqrt(spec.power[k]);
        spec.bin_freq[k] = static_cast<double>(k) * sample_rate * inv_n;
    }
    return spec;
}

} // namespace coughsig
