#pragma once

#include <stdexcept>

namespace coughsig {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- audio ingestion ---
struct MalformedFile : Error { using Error::Error; };       // bad RIFF header, truncated chunks
struct UnsupportedFormat : Error { using Error::Error; };   // compressed codecs, >2 channels, odd bit depths
struct EmptyAudio : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };

// --- framing / spectrum ---
struct ClipTooShort : Error { using Error::Error; };
struct InvalidFrameLength : Error { using Error::Error; };  // frame length must be a power of two

// --- features ---
struct SilentFrame : Error { using Error::Error; };         // zero total power
struct TooFewFrames : Error { using Error::Error; };

// --- stats ---
struct EmptyInput : Error { using Error::Error; };
struct InvalidRange : Error { using Error::Error; };

// --- report ---
struct EmptyGroup : Error { using Error::Error; };
struct DuplicateLabels : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// --- synth ---
struct InvalidSpec : Error { using Error::Error; };

} // namespace coughsig
