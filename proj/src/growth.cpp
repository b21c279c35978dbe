#include "fourcycle/growth.hpp"

#include <cmath>
#include <stdexcept>

#include "fourcycle/construct.hpp"

namespace fourcycle {

FitResult fit_exponent(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw std::invalid_argument("fit_exponent needs at least 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(points.size());
    for (auto [x, y] : points) {
        if (x <= 0 || y < 1) throw std::invalid_argument("fit_exponent needs x > 0, count >= 1");
        double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-12)
        throw std::invalid_argument("fit_exponent needs at least two distinct x values");
    FitResult fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0;
    for (auto [x, y] : points) {
        double r = std::log(y) - (fit.slope * std::log(x) + fit.intercept);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

GrowthSeries growth_series(const std::string& construction, const std::vector<int>& grid,
                           int seeds, uint64_t seed0) {
    const ConstructionSpec& spec = construction_spec(construction);
    if (grid.size() < 3) throw std::invalid_argument("growth needs a grid of >= 3 points");
    if (seeds < 1) throw std::invalid_argument("growth needs >= 1 seed");
    const int rounds = spec.uses_seed ? seeds : 1;

    GrowthSeries series;
    series.construction = construction;

    std::vector<std::vector<std::pair<double, double>>> per_seed(
        static_cast<size_t>(rounds));
    for (int param : grid) {
        double edge_sum = 0;
        int nverts = 0;
        for (int s = 0; s < rounds; ++s) {
            ConstructionParams params;
            if (spec.parameter == "n") params.n = param;
            if (spec.parameter == "m") params.m = param;
            if (spec.parameter == "q") params.q = param;
            params.seed = seed0 + static_cast<uint64_t>(s);
            BuiltConstruction built = run_construction(construction, params);
            if (!built.found) throw std::runtime_error(construction + ": no system found");
            nverts = built.system.vertex_count();
            edge_sum += built.system.triple_count();
            per_seed[static_cast<size_t>(s)].emplace_back(nverts,
                                                          built.system.triple_count());
        }
        series.points.push_back(
            {param, nverts, edge_sum / rounds});
    }

    double slope_sum = 0;
    for (const auto& pts : per_seed) {
        FitResult fit = fit_exponent(pts);
        series.per_seed_slopes.push_back(fit.slope);
        slope_sum += fit.slope;
    }
    series.mean_slope = slope_sum / rounds;

    std::vector<std::pair<double, double>> mean_pts;
    for (const auto& p : series.points) mean_pts.emplace_back(p.n, p.edges);
    FitResult fit = fit_exponent(mean_pts);
    if (fit.rms_residual > 0.05 && mean_pts.size() > 3) {
        // a noisy smallest point pollutes the exponent; drop and flag it
        size_t smallest = 0;
        for (size_t i = 1; i < mean_pts.size(); ++i)
            if (mean_pts[i].first < mean_pts[smallest].first) smallest = i;
        std::vector<std::pair<double, double>> trimmed;
        for (size_t i = 0; i < mean_pts.size(); ++i)
            if (i != smallest) trimmed.push_back(mean_pts[i]);
        fit = fit_exponent(trimmed);
        series.excluded_smallest = true;
    }
    series.intercept = fit.intercept;
    series.rms_residual = fit.rms_residual;
    return series;
}

} // namespace fourcycle
