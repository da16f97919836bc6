#include <cmath>
#include <cstdint>
#include <numbers>

#include "doctest.h"
#include "test_support.hpp"

#include "coughsig/errors.hpp"
#include "coughsig/features.hpp"
#include "coughsig/synth.hpp"

using namespace coughsig;

namespace {

double clip_mean(const AudioClip& clip, const char* attr) {
    const ExtractionResult res = extract_all(clip);
    const auto& v = res.features.at(attr).values;
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

} // namespace

TEST_CASE("splitmix64 reproduces the published stream") {
    detail::SplitMix64 rng(7);
    CHECK(rng.next_u64() == 0x63CBE1E459320DD7ULL);
    CHECK(rng.next_u64() == 0x044C3CD7F43C661CULL);
    CHECK(rng.next_u64() == 0xE6984080BAB12A02ULL);

    detail::SplitMix64 again(7);
    CHECK(again.next_double() == doctest::Approx(0.3898297483912715).epsilon(1e-15));
}

TEST_CASE("kind names round-trip") {
    for (auto kind : {SynthSpec::Kind::sine, SynthSpec::Kind::white_noise,
                      SynthSpec::Kind::cough_burst, SynthSpec::Kind::vowel}) {
        CHECK(synth_kind_from_name(synth_kind_name(kind)) == kind);
    }
    CHECK_THROWS_AS(synth_kind_from_name("chirp"), InvalidSpec);
}

TEST_CASE("same spec, same samples") {
    SynthSpec spec;
    spec.kind = SynthSpec::Kind::white_noise;
    spec.seed = 7;
    const AudioClip a = synth(spec);
    const AudioClip b = synth(spec);
    CHECK(a.samples() == b.samples());
    CHECK(a.samples()[0] == doctest::Approx(-0.17627240257396562).epsilon(1e-15));

    spec.seed = 8;
    CHECK(synth(spec).samples() != a.samples());
}

TEST_CASE("sine follows the closed form") {
    SynthSpec spec;
    spec.frequency = 997.0;
    const AudioClip clip = synth(spec);
    REQUIRE(clip.samples().size() == 22050);
    CHECK(clip.sample_rate() == 22050.0);
    CHECK(clip.source_path() == "synth:sine");
    // phase association differs from the generator's precomputed step, so
    // allow a few ulps of sin() drift
    for (std::size_t i = 0; i < 200; ++i) {
        const double expect =
            0.8 * std::sin(2.0 * std::numbers::pi * 997.0 * i / 22050.0);
        CHECK(std::abs(clip.samples()[i] - expect) <= 1e-12);
    }
}

TEST_CASE("sine zcr tracks twice the tone frequency") {
    SynthSpec spec;
    spec.frequency = 1000.0;
    const double zcr = clip_mean(synth(spec), "zcr");
    CHECK(std::abs(zcr - 0.0907) <= 0.004);
}

TEST_CASE("white noise stays inside its amplitude and is roughly centered") {
    SynthSpec spec;
    spec.kind = SynthSpec::Kind::white_noise;
    spec.seed = 3;
    const AudioClip clip = synth(spec);
    double sum = 0.0;
    for (double s : clip.samples()) {
        CHECK(s >= -0.8);
        CHECK(s < 0.8);
        sum += s;
    }
    CHECK(std::abs(sum / 22050.0) < 0.016);  // 5 sigma of the sample mean
}

TEST_CASE("cough burst: silence, attack, exponential decay") {
    SynthSpec spec;
    spec.kind = SynthSpec::Kind::cough_burst;
    spec.seed = 3;
    const AudioClip clip = synth(spec);
    const auto& s = clip.samples();

    const std::size_t onset = 441;  // 0.02 s at 22050 Hz
    for (std::size_t i = 0; i < onset; ++i) CHECK(s[i] == 0.0);
    CHECK(s[onset] != 0.0);

    const double tau = 0.1 * 22050.0;
    for (std::size_t i = onset; i < s.size(); ++i) {
        const double bound =
            0.8 * std::exp(-static_cast<double>(i - onset) / tau) + 1e-12;
        CHECK(std::abs(s[i]) <= bound);
    }

    // tail carries far less energy than the attack
    double head = 0.0, tail = 0.0;
    for (std::size_t i = onset; i < onset + 2205; ++i) head += s[i] * s[i];
    for (std::size_t i = s.size() - 2205; i < s.size(); ++i) tail += s[i] * s[i];
    CHECK(tail < 0.01 * head);
}

TEST_CASE("vowel reads darker than a cough burst") {
    SynthSpec vowel;
    vowel.kind = SynthSpec::Kind::vowel;
    SynthSpec cough;
    cough.kind = SynthSpec::Kind::cough_burst;
    cough.seed = 1;
    CHECK(clip_mean(synth(vowel), "centroid") < clip_mean(synth(cough), "centroid"));
}

TEST_CASE("vowel peaks at the target amplitude") {
    SynthSpec spec;
    spec.kind = SynthSpec::Kind::vowel;
    spec.fundamental = 150.0;
    spec.harmonics = 6;
    const AudioClip clip = synth(spec);
    double peak = 0.0;
    for (double s : clip.samples()) peak = std::max(peak, std::abs(s));
    CHECK(peak == doctest::Approx(0.8).epsilon(1e-9));
}

TEST_CASE("spec validation rejects unusable parameters") {
    SynthSpec spec;

    spec.duration = 0.0;
    CHECK_THROWS_AS(synth(spec), InvalidSpec);
    spec.duration = 0.01;  // 220 samples, under one frame
    CHECK_THROWS_AS(synth(spec), InvalidSpec);
    spec = {};

    spec.sample_rate = 0.0;
    CHECK_THROWS_AS(synth(spec), InvalidSpec);
    spec = {};

    spec.frequency = 0.0;
    CHECK_THROWS_AS(synth(spec), InvalidSpec);
    spec.frequency = 12000.0;  // above Nyquist at 22050
    CHECK_THROWS_AS(synth(spec), InvalidSpec);
    spec = {};

    spec.kind = SynthSpec::Kind::cough_burst;
    spec.decay = 0.0;
    CHECK_THROWS_AS(synth(spec), InvalidSpec);
    spec.decay = 0.1;
    spec.onset_silence = 1.0;  // no room left in a 1 s clip
    CHECK_THROWS_AS(synth(spec), InvalidSpec);
    spec = {};

    spec.kind = SynthSpec::Kind::vowel;
    spec.fundamental = 0.0;
    CHECK_THROWS_AS(synth(spec), InvalidSpec);
    spec.fundamental = 150.0;
    spec.harmonics = 0;
    CHECK_THROWS_AS(synth(spec), InvalidSpec);
}
