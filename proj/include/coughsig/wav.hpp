#pragma once

#include <filesystem>
#include <iosfwd>

#include "coughsig/audio.hpp"

namespace coughsig {

// Decode a RIFF/WAVE file. Supports PCM 16-bit, PCM 24-bit and IEEE float32,
// mono or stereo (stereo is averaged to mono). Integer samples are scaled by
// the type's full-scale magnitude (16-bit: 1/32768), so -32768 maps to -1.0.
// The clip keeps the file's native sample rate; see canonicalize().
AudioClip decode_wav(const std::filesystem::path& path);
AudioClip decode_wav(std::istream& in, const std::string& source_name = "<stream>");

// Write a clip as mono 16-bit PCM. Quantization is round(s * 32768) clamped
// to the int16 range, the inverse of the decoder's scaling within 1/32768.
void write_wav16(const AudioClip& clip, const std::filesystem::path& path);
void write_wav16(const AudioClip& clip, std::ostream& out);

} // namespace coughsig
