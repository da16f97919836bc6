#pragma once

#include <unistd.h>

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "coughsig/synth.hpp"

namespace testsup {

// Deterministic RNG for test fixtures; independent of the library's use.
using Rng = coughsig::detail::SplitMix64;

inline std::vector<double> random_samples(Rng& rng, std::size_t n, double amp = 0.9) {
    std::vector<double> s(n);
    for (auto& v : s) v = rng.next_symmetric(amp);
    return s;
}

// Minimal WAV byte builder for decoder tests.
class WavBuilder {
  public:
    WavBuilder& format(std::uint16_t code) { format_ = code; return *this; }
    WavBuilder& channels(std::uint16_t n) { channels_ = n; return *this; }
    WavBuilder& rate(std::uint32_t hz) { rate_ = hz; return *this; }
    WavBuilder& bits(std::uint16_t b) { bits_ = b; return *this; }

    WavBuilder& pcm16(const std::vector<std::int16_t>& samples) {
        for (std::int16_t s : samples) push_le(static_cast<std::uint16_t>(s), 2);
        return *this;
    }
    WavBuilder& pcm24(const std::vector<std::int32_t>& samples) {
        for (std::int32_t s : samples) push_le(static_cast<std::uint32_t>(s), 3);
        return *this;
    }
    WavBuilder& f32(const std::vector<float>& samples) {
        for (float s : samples) {
            std::uint32_t u;
            std::memcpy(&u, &s, 4);
            push_le(u, 4);
        }
        return *this;
    }

    std::string bytes() const {
        std::string fmt;
        append_le(fmt, format_, 2);
        append_le(fmt, channels_, 2);
        append_le(fmt, rate_, 4);
        const std::uint32_t block = channels_ * bits_ / 8;
        append_le(fmt, rate_ * block, 4);
        append_le(fmt, block, 2);
        append_le(fmt, bits_, 2);

        std::string body = "WAVE";
        body += "fmt ";
        append_le(body, static_cast<std::uint32_t>(fmt.size()), 4);
        body += fmt;
        body += "data";
        append_le(body, static_cast<std::uint32_t>(data_.size()), 4);
        body += data_;

        std::string out = "RIFF";
        append_le(out, static_cast<std::uint32_t>(body.size()), 4);
        out += body;
        return out;
    }

    std::istringstream stream() const { return std::istringstream(bytes()); }

  private:
    static void append_le(std::string& out, std::uint32_t v, int n) {
        for (int i = 0; i < n; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    }
    void push_le(std::uint32_t v, int n) { append_le(data_, v, n); }

    std::uint16_t format_ = 1;
    std::uint16_t channels_ = 1;
    std::uint32_t rate_ = 22050;
    std::uint16_t bits_ = 16;
    std::string data_;
};

// Scratch directory under the system temp root, removed on destruction.
class TempDir {
  public:
    explicit TempDir(const std::string& tag) {
        dir_ = std::filesystem::temp_directory_path() /
               ("coughsig_test_" + tag + "_" + std::to_string(::getpid()));
        std::filesystem::remove_all(dir_);
        std::filesystem::create_directories(dir_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(dir_, ec);
    }
    const std::filesystem::path& path() const { return dir_; }
    std::filesystem::path operator/(const std::string& name) const { return dir_ / name; }

  private:
    std::filesystem::path dir_;
};

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace testsup
