#ifndef FOURCYCLE_GROWTH_HPP
#define FOURCYCLE_GROWTH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fourcycle {

struct FitResult {
    double slope = 0;
    double intercept = 0;
    double rms_residual = 0;
};

// Least squares of log(count) against log(x). Needs >= 3 points, counts
// >= 1 and at least two distinct x values; throws std::invalid_argument
// otherwise.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& points);

struct GrowthPoint {
    int param = 0;       // the construction parameter (n, m or q)
    int n = 0;           // resulting vertex count
    double edges = 0;    // triple count, averaged over seeds where relevant
};

struct GrowthSeries {
    std::string construction;
    std::vector<GrowthPoint> points;
    std::vector<double> per_seed_slopes;  // one entry for seedless constructions
    double mean_slope = 0;
    double intercept = 0;
    double rms_residual = 0;
    bool excluded_smallest = false;  // refit without the smallest point
};

// Builds the construction across the parameter grid (and seed count for the
// seeded generators) and fits the growth exponent of the triple count. A
// noisy fit (rms residual > 0.05 with > 3 points) is refit without the
// smallest point and flagged.
GrowthSeries growth_series(const std::string& construction, const std::vector<int>& grid,
                           int seeds = 1, uint64_t seed0 = 0);

} // namespace fourcycle

#endif
