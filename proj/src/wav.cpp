#include "coughsig/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "coughsig/errors.hpp"

namespace coughsig {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

struct Reader {
    const std::uint8_t* data;
    std::size_t size;
    std::size_t pos = 0;

    bool can_read(std::size_t n) const { return pos + n <= size; }

    std::uint32_t u32() {
        std::uint32_t v = static_cast<std::uint32_t>(data[pos]) |
                          static_cast<std::uint32_t>(data[pos + 1]) << 8 |
                          static_cast<std::uint32_t>(data[pos + 2]) << 16 |
                          static_cast<std::uint32_t>(data[pos + 3]) << 24;
        pos += 4;
        return v;
    }
    std::uint16_t u16() {
        std::uint16_t v = static_cast<std::uint16_t>(data[pos] | (data[pos + 1] << 8));
        pos += 2;
        return v;
    }
    bool tag(const char* expected) {
        bool ok = std::memcmp(data + pos, expected, 4) == 0;
        pos += 4;
        return ok;
    }
};

double decode_sample(const std::uint8_t* p, std::uint16_t bits, std::uint16_t format) {
    if (format == kFormatFloat) {
        float f;
        std::memcpy(&f, p, 4);
        return static_cast<double>(f);
    }
    if (bits == 16) {
        auto v = static_cast<std::int16_t>(p[0] | (p[1] << 8));
        return static_cast<double>(v) / 32768.0;
    }
    // 24-bit, sign-extended
    std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
    if (v & 0x800000) v |= ~0xFFFFFF;
    return static_cast<double>(v) / 8388608.0;
}

AudioClip decode_buffer(const std::vector<std::uint8_t>& buf, const std::string& name) {
    Reader r{buf.data(), buf.size()};
    if (!r.can_read(12)) throw MalformedFile(name + ": shorter than a RIFF header");
    if (!r.tag("RIFF")) throw MalformedFile(name + ": missing RIFF tag");
    r.u32();  // declared riff size; ignored, real files are often sloppy here
    if (!r.tag("WAVE")) throw MalformedFile(name + ": missing WAVE tag");

    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t rate = 0;
    bool have_fmt = false;
    const std::uint8_t* payload = nullptr;
    std::size_t payload_size = 0;

    while (r.can_read(8)) {
        char id[4];
        std::memcpy(id, r.data + r.pos, 4);
        r.pos += 4;
        std::uint32_t chunk_size = r.u32();
        if (!r.can_read(chunk_size)) {
            throw MalformedFile(name + ": truncated chunk");
        }
        if (std::memcmp(id, "fmt ", 4) == 0) {
            if (chunk_size < 16) throw MalformedFile(name + ": fmt chunk too small");
            Reader f{r.data + r.pos, chunk_size};
            format = f.u16();
            channels = f.u16();
            rate = f.u32();
            f.u32();  // byte rate
            f.u16();  // block align
            bits = f.u16();
            if (format == kFormatExtensible && chunk_size >= 40) {
                // sub-format GUID starts with the effective format code
                format = static_cast<std::uint16_t>(r.data[r.pos + 24] | (r.data[r.pos + 25] << 8));
            }
            have_fmt = true;
        } else if (std::memcmp(id, "data", 4) == 0) {
            payload = r.data + r.pos;
            payload_size = chunk_size;
        }
        r.pos += chunk_size + (chunk_size & 1);  // chunks are word-aligned
    }

    if (!have_fmt || payload == nullptr) {
        throw MalformedFile(name + ": missing fmt or data chunk");
    }
    if (channels == 0 || channels > 2) {
        throw UnsupportedFormat(name + ": only mono and stereo are supported");
    }
    const bool pcm_ok = format == kFormatPcm && (bits == 16 || bits == 24);
    const bool float_ok = format == kFormatFloat && bits == 32;
    if (!pcm_ok && !float_ok) {
        throw UnsupportedFormat(name + ": need PCM16, PCM24 or float32 samples");
    }
    if (rate == 0) throw MalformedFile(name + ": zero sample rate");

    const std::size_t bytes_per_sample = bits / 8;
    const std::size_t stride = bytes_per_sample * channels;
    const std::size_t n_frames = payload_size / stride;
    if (n_frames == 0) throw EmptyAudio(name + ": no samples in data chunk");

    std::vector<double> samples(n_frames);
    for (std::size_t i = 0; i < n_frames; ++i) {
        const std::uint8_t* p = payload + i * stride;
        double s = decode_sample(p, bits, format);
        if (channels == 2) {
            s = 0.5 * (s + decode_sample(p + bytes_per_sample, bits, format));
        }
        samples[i] = std::clamp(s, -1.0, 1.0);
    }
    return AudioClip(std::move(samples), static_cast<double>(rate), name);
}

void put_u32(std::ostream& out, std::uint32_t v) {
    char b[4] = {static_cast<char>(v), static_cast<char>(v >> 8),
                 static_cast<char>(v >> 16), static_cast<char>(v >> 24)};
    out.write(b, 4);
}

void put_u16(std::ostream& out, std::uint16_t v) {
    char b[2] = {static_cast<char>(v), static_cast<char>(v >> 8)};
    out.write(b, 2);
}

} // namespace

AudioClip decode_wav(std::istream& in, const std::string& source_name) {
    std::vector<std::uint8_t> buf;
    char chunk[4096];
    while (in.read(chunk, sizeof chunk) || in.gcount() > 0) {
        buf.insert(buf.end(), chunk, chunk + in.gcount());
    }
    return decode_buffer(buf, source_name);
}

AudioClip decode_wav(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return decode_wav(in, path.string());
}

void write_wav16(const AudioClip& clip, std::ostream& out) {
    const auto n = static_cast<std::uint32_t>(clip.size());
    const auto rate = static_cast<std::uint32_t>(std::llround(clip.sample_rate()));
    const std::uint32_t data_bytes = n * 2;

    out.write("RIFF", 4);
    put_u32(out, 36 + data_bytes);
    out.write("WAVE", 4);
    out.write("fmt ", 4);
    put_u32(out, 16);
    put_u16(out, kFormatPcm);
    put_u16(out, 1);  // mono
    put_u32(out, rate);
    put_u32(out, rate * 2);  // byte rate
    put_u16(out, 2);         // block align
    put_u16(out, 16);
    out.write("data", 4);
    put_u32(out, data_bytes);
    for (double s : clip.samples()) {
        auto q = static_cast<std::int32_t>(std::lround(s * 32768.0));
        q = std::clamp(q, -32768, 32767);
        put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
    }
    if (!out) throw IoError("failed writing WAV stream");
}

void write_wav16(const AudioClip& clip, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    write_wav16(clip, out);
}

} // namespace coughsig
