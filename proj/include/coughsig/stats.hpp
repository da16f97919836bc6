#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace coughsig {

// Location and spread measures of a value series. Percentiles use linear
// interpolation between closest ranks; std is the population standard
// deviation (divide by n).
struct SummaryStats {
    double min = 0;
    double max = 0;
    double mean = 0;
    double p25 = 0;
    double median = 0;
    double p75 = 0;
    double std_dev = 0;
};

SummaryStats summarize(std::span<const double> values);

// Percentile in [0, 1] by linear interpolation on the sorted values.
double percentile(std::span<const double> values, double p);

struct Histogram {
    std::vector<double> bin_edges;   // bins + 1, strictly increasing
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;

    std::size_t bins() const { return counts.size(); }
};

// Equal-width histogram. The default range is the observed [min, max],
// widened by 1e-9 when degenerate; the final bin is right-closed so the
// maximum lands in it. With an explicit range, values outside are dropped.
Histogram build_histogram(std::span<const double> values, std::size_t bins,
                          std::optional<std::pair<double, double>> range = std::nullopt);

} // namespace coughsig
