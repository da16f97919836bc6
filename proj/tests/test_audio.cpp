#include <cmath>
#include <numbers>

#include "doctest.h"
#include "test_support.hpp"

#include "coughsig/audio.hpp"
#include "coughsig/errors.hpp"
#include "coughsig/spectrum.hpp"
#include "coughsig/wav.hpp"

using namespace coughsig;
using testsup::WavBuilder;

TEST_CASE("AudioClip validates its invariants on construction") {
    CHECK_THROWS_AS(AudioClip({}, 22050.0), EmptyAudio);
    CHECK_THROWS_AS(AudioClip({0.0}, 0.0), InvalidArgument);
    CHECK_THROWS_AS(AudioClip({0.0}, -1.0), InvalidArgument);
    CHECK_THROWS_AS(AudioClip({1.5}, 22050.0), InvalidArgument);
    CHECK_THROWS_AS(AudioClip({-1.0001}, 22050.0), InvalidArgument);

    const AudioClip ok({1.0, -1.0, 0.25}, 8000.0, "src.wav");
    CHECK(ok.size() == 3);
    CHECK(ok.sample_rate() == 8000.0);
    CHECK(ok.duration() == doctest::Approx(3.0 / 8000.0));
    CHECK(ok.source_path() == "src.wav");
    CHECK_FALSE(ok.group_label().has_value());
    CHECK(ok.with_label("g").group_label() == std::string("g"));
}

TEST_CASE("PCM16 decoding scales by full scale") {
    auto stream =
        WavBuilder().pcm16({32767, -32768, 0, 16384}).stream();
    const AudioClip clip = decode_wav(stream, "mem");

    REQUIRE(clip.size() == 4);
    CHECK(clip.samples()[0] == doctest::Approx(32767.0 / 32768.0).epsilon(1e-12));
    CHECK(clip.samples()[1] == -1.0);
    CHECK(clip.samples()[2] == 0.0);
    CHECK(clip.samples()[3] == 0.5);
    CHECK(clip.sample_rate() == 22050.0);
}

TEST_CASE("stereo frames average to mono") {
    // L = 0.5, R = -0.5 -> 0; L = 0.5, R = 0 -> 0.25
    auto stream = WavBuilder().channels(2).pcm16({16384, -16384, 16384, 0}).stream();
    const AudioClip clip = decode_wav(stream, "mem");

    REQUIRE(clip.size() == 2);
    CHECK(clip.samples()[0] == 0.0);
    CHECK(clip.samples()[1] == 0.25);
}

TEST_CASE("PCM24 and float32 payloads decode") {
    auto s24 = WavBuilder().bits(24).pcm24({8388607, -8388608, 0}).stream();
    const AudioClip c24 = decode_wav(s24, "mem");
    REQUIRE(c24.size() == 3);
    CHECK(c24.samples()[0] == doctest::Approx(8388607.0 / 8388608.0).epsilon(1e-12));
    CHECK(c24.samples()[1] == -1.0);
    CHECK(c24.samples()[2] == 0.0);

    auto sf = WavBuilder().format(3).bits(32).f32({0.25f, -0.75f, 1.0f}).stream();
    const AudioClip cf = decode_wav(sf, "mem");
    REQUIRE(cf.size() == 3);
    CHECK(cf.samples()[0] == 0.25);
    CHECK(cf.samples()[1] == -0.75);
    CHECK(cf.samples()[2] == 1.0);
}

TEST_CASE("decoder rejects malformed and unsupported input") {
    SUBCASE("not RIFF") {
        std::istringstream in("JUNKJUNKJUNKJUNK");
        CHECK_THROWS_AS(decode_wav(in, "mem"), MalformedFile);
    }
    SUBCASE("truncated data chunk") {
        std::string bytes = WavBuilder().pcm16({1, 2, 3, 4}).bytes();
        bytes.resize(bytes.size() - 3);
        std::istringstream in(bytes);
        CHECK_THROWS_AS(decode_wav(in, "mem"), MalformedFile);
    }
    SUBCASE("three channels") {
        auto in = WavBuilder().channels(3).pcm16({0, 0, 0}).stream();
        CHECK_THROWS_AS(decode_wav(in, "mem"), UnsupportedFormat);
    }
    SUBCASE("compressed format tag") {
        auto in = WavBuilder().format(85).pcm16({0}).stream();
        CHECK_THROWS_AS(decode_wav(in, "mem"), UnsupportedFormat);
    }
    SUBCASE("zero samples") {
        auto in = WavBuilder().pcm16({}).stream();
        CHECK_THROWS_AS(decode_wav(in, "mem"), EmptyAudio);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(decode_wav(std::filesystem::path("/nonexistent/x.wav")),
                        IoError);
    }
}

TEST_CASE("16-bit write/decode round trip stays within one quantum") {
    testsup::Rng rng(7);
    const AudioClip clip(testsup::random_samples(rng, 2000), 22050.0);

    testsup::TempDir tmp("roundtrip");
    const auto path = tmp / "clip.wav";
    write_wav16(clip, path);
    const AudioClip back = decode_wav(path);

    REQUIRE(back.size() == clip.size());
    CHECK(back.sample_rate() == clip.sample_rate());
    for (std::size_t i = 0; i < clip.size(); ++i) {
        CHECK(std::abs(back.samples()[i] - clip.samples()[i]) <= 1.0 / 32768.0);
    }
}

TEST_CASE("resample halves the length for 2:1 decimation") {
    testsup::Rng rng(11);
    const AudioClip clip(testsup::random_samples(rng, 44100), 44100.0);
    const AudioClip out = resample(clip, 22050.0);
    CHECK(out.sample_rate() == 22050.0);
    CHECK(std::llabs(static_cast<long long>(out.size()) - 22050) <= 1);
}

TEST_CASE("resample at the same rate returns the clip unchanged") {
    testsup::Rng rng(12);
    const AudioClip clip(testsup::random_samples(rng, 1000), 22050.0);
    const AudioClip out = resample(clip, 22050.0);
    REQUIRE(out.size() == clip.size());
    for (std::size_t i = 0; i < clip.size(); ++i) {
        CHECK(out.samples()[i] == clip.samples()[i]);
    }
}

TEST_CASE("1000 Hz sine keeps its dominant bin across 44100 -> 22050") {
    std::vector<double> s(44100);
    for (std::size_t n = 0; n < s.size(); ++n) {
        s[n] = 0.8 * std::sin(2.0 * std::numbers::pi * 1000.0 * n / 44100.0);
    }
    const AudioClip out = canonicalize(AudioClip(std::move(s), 44100.0));
    REQUIRE(out.sample_rate() == 22050.0);

    // take an interior frame to dodge filter edge effects
    std::vector<double> frame(out.samples().begin() + 4096,
                              out.samples().begin() + 4096 + 512);
    const PowerSpectrum spec = power_spectrum(frame, out.sample_rate());
    std::size_t peak = 0;
    for (std::size_t k = 1; k < spec.bin_count(); ++k) {
        if (spec.power[k] > spec.power[peak]) peak = k;
    }
    CHECK(std::abs(spec.bin_freq[peak] - 1000.0) <= 22050.0 / 512.0);
}

TEST_CASE("resample is linear in the input") {
    testsup::Rng rng(13);
    std::vector<double> base = testsup::random_samples(rng, 4410, 0.5);
    std::vector<double> scaled(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) scaled[i] = 0.5 * base[i];

    const AudioClip a = resample(AudioClip(base, 44100.0), 22050.0);
    const AudioClip b = resample(AudioClip(scaled, 44100.0), 22050.0);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(std::abs(b.samples()[i] - 0.5 * a.samples()[i]) < 1e-9);
    }
}

TEST_CASE("canonicalized clips satisfy the clip invariants") {
    testsup::Rng rng(14);
    for (double rate : {8000.0, 16000.0, 32000.0, 44100.0, 48000.0}) {
        const AudioClip clip(testsup::random_samples(rng, 3000, 1.0), rate);
        const AudioClip canon = canonicalize(clip);
        CHECK(canon.sample_rate() == 22050.0);
        CHECK(canon.size() >= 1);
        for (double v : canon.samples()) {
            CHECK(v >= -1.0);
            CHECK(v <= 1.0);
        }
    }
}

TEST_CASE("resample validates the target rate") {
    const AudioClip clip(std::vector<double>(100, 0.1), 22050.0);
    CHECK_THROWS_AS(resample(clip, 0.0), InvalidArgument);
    CHECK_THROWS_AS(resample(clip, -5.0), InvalidArgument);
}
