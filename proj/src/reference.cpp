#include "coughsig/reference.hpp"

#include <charconv>
#include <string>

namespace coughsig {

namespace {

constexpr std::array<ReferenceTable, 3> kTables{{
    {"cough_voiced",
     "Statistical analysis of cough with voiced content",
     {{
         {"rolloff", {1378, 9216, 4451, 2670, 4392, 5943, 1949}},
         {"entropy", {0, 1, 0.067, 0.001, 0.005, 0.021, 0.174}},
         {"flatness", {0, 0.047, 0.012, 0.003, 0.01, 0.018, 0.011}},
         {"flux", {0, 1, 0.409, 0.293, 0.402, 0.551, 0.225}},
         {"zcr", {0.025, 0.225, 0.1, 0.061, 0.086, 0.131, 0.046}},
         {"centroid", {1045, 3996, 2154, 1542, 2122, 2619, 700}},
         {"bandwidth", {1273, 3605, 2286, 1864, 2276, 2680, 527}},
     }}},
    {"cough_unvoiced",
     "Statistical analysis of cough with unvoiced content",
     {{
         {"rolloff", {1808, 9819, 5705, 4392, 5555, 7321, 1961}},
         {"entropy", {0, 1, 0.079, 0.003, 0.023, 0.076, 0.15}},
         {"flatness", {0, 0.221, 0.057, 0.009, 0.036, 0.094, 0.057}},
         {"flux", {0, 1, 0.438, 0.324, 0.45, 0.552, 0.222}},
         {"zcr", {0.035, 0.51, 0.222, 0.144, 0.230, 0.305, 0.097}},
         {"centroid", {907, 5397, 3124, 2473, 3229, 3730, 917}},
         {"bandwidth", {1307, 3760, 2348, 1807, 2470, 2792, 574}},
     }}},
    {"speech",
     "Statistical analysis of speech signals",
     {{
         {"rolloff", {861, 3445, 1770, 1335, 1636, 2153, 597}},
         {"entropy", {0, 1, 0.062, 0, 0, 0.01, 0.18}},
         {"flatness", {0, 0, 0, 0, 0, 0, 0}},
         {"flux", {0.0, 1, 0.304, 0.148, 0.258, 0.44, 0.221}},
         {"zcr", {0.02, 0.102, 0.060, 0.051, 0.06, 0.07, 0.016}},
         {"centroid", {583, 1626, 1019, 867, 994, 1152, 221}},
         {"bandwidth", {381, 1349, 745, 565, 719, 874, 218}},
     }}},
}};

void digest_bytes(std::uint64_t& h, std::string_view s) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
}

void digest_value(std::uint64_t& h, double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    digest_bytes(h, std::string_view(buf, static_cast<std::size_t>(end - buf)));
    digest_bytes(h, "|");
}

} // namespace

const std::array<ReferenceTable, 3>& reference_tables() { return kTables; }

const ReferenceStats* reference_lookup(std::string_view group, std::string_view attribute) {
    for (const auto& table : kTables) {
        if (table.group != group) continue;
        for (const auto& row : table.rows) {
            if (row.attribute == attribute) return &row.stats;
        }
    }
    return nullptr;
}

std::uint64_t reference_digest() {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const auto& table : kTables) {
        digest_bytes(h, table.group);
        digest_bytes(h, "\n");
        for (const auto& row : table.rows) {
            digest_bytes(h, row.attribute);
            digest_bytes(h, ":");
            digest_value(h, row.stats.min);
            digest_value(h, row.stats.max);
            digest_value(h, row.stats.mean);
            digest_value(h, row.stats.p25);
            digest_value(h, row.stats.median);
            digest_value(h, row.stats.p75);
            digest_value(h, row.stats.std_dev);
            digest_bytes(h, "\n");
        }
    }
    return h;
}

} // namespace coughsig
