#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lojex/bipoly.hpp"
#include "lojex/wfilter.hpp"

namespace lojex {

struct EstimateConfig {
    double r0 = 0.1;                  // initial radius
    double gamma = 0.5;               // radius ratio, in (0, 1)
    int num_radii = 8;                // >= 3
    int samples_per_circle = 4096;    // >= 64
    std::uint64_t seed = 0x5EED;

    void validate() const;
};

struct EstimateReport {
    std::vector<double> radii;    // surviving rungs only
    std::vector<double> minima;   // min ||grad f|| per surviving rung
    double fitted_slope = 0.0;
    double slope_stderr = 0.0;
    // Extremes of ||grad_w f||_w / rho^d over all samples; set only when
    // a weight system was supplied.
    std::optional<double> weighted_ratio_min;
    std::optional<double> weighted_ratio_max;
    std::vector<std::string> warnings;  // dropped rungs etc.
};

// Double-precision gradient (d1p, d2p) at a point, terms summed in
// canonical sorted order. Throws DomainError naming the offending
// monomial on overflow.
std::pair<double, double> eval_grad(const BiPoly& p, double x, double y);

// Minimum Euclidean gradient norm over jittered equi-angular samples of
// the circle of radius r. The sample set for a given seed is
// prefix-stable: the first n angles are the same for every
// samples_per_circle >= n, so refinement never increases the minimum.
double min_grad_on_circle(const BiPoly& p, double r, const EstimateConfig& cfg);

// Least-squares fit of log(min ||grad||) against log(r) over the radius
// ladder. Rungs whose minimum underflows are dropped with a warning;
// when every rung is dropped this throws ("degenerate or underflow").
// When ws is supplied, the report also carries the weighted-ratio
// extremes over the same samples.
EstimateReport estimate_exponent(const BiPoly& p, const EstimateConfig& cfg,
                                 const std::optional<WeightSystem>& ws = std::nullopt);

// Extremes of ||grad_w p||_w / rho^d over jittered samples of the
// weighted spheres {rho = r} across the radius ladder.
std::pair<double, double> check_weighted_bounds(const BiPoly& p, const WeightSystem& ws,
                                                const EstimateConfig& cfg);

// rho(x) = (|x1|^(2/w1) + |x2|^(2/w2))^(1/2)
double rho_function(double x, double y, const WeightSystem& ws);

}  // namespace lojex
