#include "coughsig/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "coughsig/errors.hpp"

namespace coughsig {

namespace {

// Linear interpolation between closest ranks: h = (n - 1) * p on the sorted values.
double percentile_sorted(const std::vector<double>& sorted, double p) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double h = static_cast<double>(n - 1) * p;
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return sorted[n - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

} // namespace

double percentile(std::span<const double> values, double p) {
    if (values.empty()) throw EmptyInput("percentile of empty input");
    if (!(p >= 0.0) || !(p <= 1.0)) throw InvalidArgument("percentile p must be in [0, 1]");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return percentile_sorted(sorted, p);
}

SummaryStats summarize(std::span<const double> values) {
    if (values.empty()) throw EmptyInput("summarize of empty input");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    const std::size_t n = sorted.size();
    double sum = 0.0;
    for (double v : sorted) sum += v;
    const double mean = sum / static_cast<double>(n);

    double sq = 0.0;
    for (double v : sorted) {
        const double d = v - mean;
        sq += d * d;
    }

    SummaryStats s;
    s.min = sorted.front();
    s.max = sorted.back();
    s.mean = mean;
    s.p25 = percentile_sorted(sorted, 0.25);
    s.median = percentile_sorted(sorted, 0.50);
    s.p75 = percentile_sorted(sorted, 0.75);
    s.std_dev = std::sqrt(sq / static_cast<double>(n));
    return s;
}

Histogram build_histogram(std::span<const double> values, std::size_t bins,
                          std::optional<std::pair<double, double>> range) {
    if (values.empty()) throw EmptyInput("histogram of empty input");
    if (bins == 0) throw InvalidArgument("histogram needs at least one bin");

    double lo, hi;
    if (range) {
        lo = range->first;
        hi = range->second;
        if (!(lo < hi)) throw InvalidRange("histogram range must satisfy lo < hi");
    } else {
        auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
        lo = *min_it;
        hi = *max_it;
        if (lo == hi) hi = lo + 1e-9;  // degenerate range; single spike lands in bin 0
    }

    Histogram h;
    h.bin_edges.resize(bins + 1);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (std::size_t i = 0; i <= bins; ++i) {
        h.bin_edges[i] = lo + width * static_cast<double>(i);
    }
    h.bin_edges[bins] = hi;

    h.counts.assign(bins, 0);
    h.total = 0;
    for (double v : values) {
        if (v < lo || v > hi) continue;  // out-of-range only possible with explicit range
        auto idx = static_cast<std::size_t>((v - lo) / width);
        if (idx >= bins) idx = bins - 1;  // final bin is right-closed
        ++h.counts[idx];
        ++h.total;
    }
    return h;
}

} // namespace coughsig
