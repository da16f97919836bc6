#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "test_support.hpp"

#include "coughsig/errors.hpp"
#include "coughsig/spectrum.hpp"

using namespace coughsig;

namespace {

// Brute-force O(N^2) one-sided power spectrum, the independent oracle.
std::vector<double> naive_power(const std::vector<double>& frame) {
    const std::size_t n = frame.size();
    std::vector<double> power(n / 2 + 1);
    for (std::size_t k = 0; k <= n / 2; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double phase = -2.0 * std::numbers::pi * k * i / static_cast<double>(n);
            acc += frame[i] * std::complex<double>(std::cos(phase), std::sin(phase));
        }
        power[k] = std::norm(acc) / static_cast<double>(n);
    }
    return power;
}

} // namespace

TEST_CASE("all-zero frame gives an all-zero spectrum") {
    const std::vector<double> frame(512, 0.0);
    const PowerSpectrum spec = power_spectrum(frame, 22050.0);
    REQUIRE(spec.bin_count() == 257);
    for (double p : spec.power) CHECK(p == 0.0);
    CHECK(spec.total_power() == 0.0);
}

TEST_CASE("bin-aligned cosine concentrates power in its bin") {
    std::vector<double> frame(512);
    for (std::size_t n = 0; n < 512; ++n) {
        frame[n] = std::cos(2.0 * std::numbers::pi * 50.0 * n / 512.0);
    }
    const PowerSpectrum spec = power_spectrum(frame, 22050.0);
    CHECK(spec.power[50] >= 0.99 * spec.total_power());
}

TEST_CASE("bin frequencies run from DC to Nyquist") {
    const PowerSpectrum spec = power_spectrum(std::vector<double>(512, 0.25), 22050.0);
    REQUIRE(spec.bin_count() == 257);
    CHECK(spec.bin_freq.front() == 0.0);
    CHECK(spec.bin_freq.back() == doctest::Approx(11025.0).epsilon(1e-12));
    CHECK(spec.bin_freq[50] == doctest::Approx(50.0 * 22050.0 / 512.0).epsilon(1e-12));
    for (std::size_t k = 1; k < spec.bin_count(); ++k) {
        CHECK(spec.bin_freq[k] > spec.bin_freq[k - 1]);
    }
}

TEST_CASE("FFT matches the naive DFT oracle on random frames") {
    testsup::Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = trial % 2 == 0 ? 512 : 256;
        const std::vector<double> frame = testsup::random_samples(rng, n);
        const PowerSpectrum spec = power_spectrum(frame, 22050.0);
        const std::vector<double> expect = naive_power(frame);

        REQUIRE(spec.bin_count() == expect.size());
        double scale = 0.0;
        for (double p : expect) scale = std::max(scale, p);
        for (std::size_t k = 0; k < expect.size(); ++k) {
            CHECK(std::abs(spec.power[k] - expect[k]) <= 1e-9 * scale);
            CHECK(spec.magnitude[k] ==
                  doctest::Approx(std::sqrt(spec.power[k])).epsilon(1e-12));
        }
    }
}

TEST_CASE("Parseval holds for random frames") {
    testsup::Rng rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<double> frame = testsup::random_samples(rng, 512);
        const PowerSpectrum spec = power_spectrum(frame, 22050.0);

        double onesided = spec.power.front() + spec.power.back();
        for (std::size_t k = 1; k + 1 < spec.bin_count(); ++k) {
            onesided += 2.0 * spec.power[k];
        }
        double mean_square = 0.0;
        for (double s : frame) mean_square += s * s;
        mean_square /= static_cast<double>(frame.size());

        const double expect = 512.0 * mean_square;
        CHECK(std::abs(onesided - expect) <= 1e-6 * expect);
    }
}

TEST_CASE("power scales quadratically with amplitude") {
    testsup::Rng rng(33);
    const std::vector<double> frame = testsup::random_samples(rng, 512, 0.25);
    std::vector<double> scaled(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i) scaled[i] = 3.0 * frame[i];

    const PowerSpectrum a = power_spectrum(frame, 22050.0);
    const PowerSpectrum b = power_spectrum(scaled, 22050.0);
    for (std::size_t k = 0; k < a.bin_count(); ++k) {
        CHECK(std::abs(b.power[k] - 9.0 * a.power[k]) <=
              1e-9 * std::max(1.0, std::abs(b.power[k])));
    }
}

TEST_CASE("non power-of-two frames are rejected") {
    CHECK_THROWS_AS(power_spectrum(std::vector<double>(500, 0.1), 22050.0),
                    InvalidFrameLength);
    CHECK_THROWS_AS(power_spectrum(std::vector<double>(1, 0.1), 22050.0),
                    InvalidFrameLength);
    CHECK_THROWS_AS(power_spectrum(std::vector<double>{}, 22050.0), InvalidFrameLength);
}

TEST_CASE("from_power reconstructs magnitude and bin frequencies") {
    const PowerSpectrum spec = PowerSpectrum::from_power({0.0, 4.0, 1.0}, 8000.0);
    REQUIRE(spec.bin_count() == 3);
    CHECK(spec.frame_length() == 4);
    CHECK(spec.magnitude[1] == 2.0);
    CHECK(spec.bin_freq[1] == doctest::Approx(2000.0).epsilon(1e-12));
    CHECK(spec.bin_freq[2] == doctest::Approx(4000.0).epsilon(1e-12));
    CHECK(spec.total_power() == 5.0);
}
