#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace coughsig {

// Bundled reference ranges for three recording groups (cough with voiced
// content, cough without voiced content, speech), one row per descriptor.
// Shipped as display annotations for side-by-side comparison; never used
// as assertions about user audio.

struct ReferenceStats {
    double min;
    double max;
    double mean;
    double p25;
    double median;
    double p75;
    double std_dev;
};

struct ReferenceRow {
    std::string_view attribute;  // canonical descriptor name ("rolloff", ...)
    ReferenceStats stats;
};

struct ReferenceTable {
    std::string_view group;  // "cough_voiced" | "cough_unvoiced" | "speech"
    std::string_view title;
    std::array<ReferenceRow, 7> rows;
};

const std::array<ReferenceTable, 3>& reference_tables();

// nullptr when the group or attribute is unknown.
const ReferenceStats* reference_lookup(std::string_view group, std::string_view attribute);

// Stable FNV-1a digest over the canonical serialization of all tables;
// guards the shipped values against accidental edits.
std::uint64_t reference_digest();

} // namespace coughsig
