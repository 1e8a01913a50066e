#include "lojex/numeric.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "lojex/error.hpp"

namespace lojex {

namespace {

constexpr double kUnderflowFloor = 1e-300;

// Infinite jittered angle sequence: 64 equally spaced base points, then
// successive midpoint refinements, each point offset by less than half
// the spacing of its own level. Any prefix of the sequence is a valid
// sample set, and longer prefixes are supersets of shorter ones.
std::vector<double> sample_angles(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-0.5, 0.5);
    std::vector<double> angles;
    angles.reserve(static_cast<std::size_t>(n));

    constexpr int kBase = 64;
    const double two_pi = 2.0 * M_PI;
    double spacing = two_pi / kBase;
    for (int k = 0; k < kBase && static_cast<int>(angles.size()) < n; ++k)
        angles.push_back((k + unit(rng)) * spacing);
    int level_points = kBase;
    while (static_cast<int>(angles.size()) < n) {
        double half = spacing / 2.0;
        for (int k = 0; k < level_points && static_cast<int>(angles.size()) < n; ++k)
            angles.push_back(k * spacing + half + unit(rng) * half);
        spacing = half;
        level_points *= 2;
    }
    return angles;
}

struct GradEvaluator {
    explicit GradEvaluator(const BiPoly& p) : d1(p.partial(1)), d2(p.partial(2)) {}

    double eval_partial(const BiPoly& dp, double x, double y) const {
        double acc = 0.0;
        for (const auto& [e, c] : dp.terms()) {
            double term = rational_to_double(c) * std::pow(x, e.first) * std::pow(y, e.second);
            if (!std::isfinite(term))
                throw DomainError("overflow evaluating monomial x^" + std::to_string(e.first) +
                                  "*y^" + std::to_string(e.second));
            acc += term;
        }
        if (!std::isfinite(acc)) throw DomainError("overflow summing gradient terms");
        return acc;
    }

    std::pair<double, double> operator()(double x, double y) const {
        return {eval_partial(d1, x, y), eval_partial(d2, x, y)};
    }

    BiPoly d1, d2;
};

double grad_norm_at_angle(const GradEvaluator& grad, double r, double theta) {
    auto [gx, gy] = grad(r * std::cos(theta), r * std::sin(theta));
    return std::hypot(gx, gy);
}

// Minimum of ||grad|| over the circle: jittered equi-angular samples,
// then deterministic grid refinement around the best few samples. The
// refinement is needed because the angular valley around a near-critical
// direction narrows like a power of r and falls below any fixed sample
// spacing.
double min_on_circle(const GradEvaluator& grad, double r, const std::vector<double>& angles) {
    double best = std::numeric_limits<double>::infinity();
    double best_theta = 0.0, second_theta = 0.0;
    double second = std::numeric_limits<double>::infinity();
    for (double theta : angles) {
        double v = grad_norm_at_angle(grad, r, theta);
        if (v < best) {
            second = best;
            second_theta = best_theta;
            best = v;
            best_theta = theta;
        } else if (v < second) {
            second = v;
            second_theta = theta;
        }
    }
    double gap = 2.0 * M_PI / static_cast<double>(angles.size());
    for (double center : {best_theta, second_theta}) {
        double lo = center - gap, hi = center + gap;
        while (hi - lo > 1e-17) {
            constexpr int kGrid = 24;
            double step = (hi - lo) / kGrid;
            double local_best = best;
            double local_theta = 0.5 * (lo + hi);
            for (int k = 0; k <= kGrid; ++k) {
                double theta = lo + k * step;
                double v = grad_norm_at_angle(grad, r, theta);
                if (v < local_best) {
                    local_best = v;
                    local_theta = theta;
                }
            }
            best = std::min(best, local_best);
            lo = local_theta - step;
            hi = local_theta + step;
        }
    }
    return best;
}

double weighted_ratio(const GradEvaluator& grad, const WeightSystem& ws, double x, double y) {
    double rho = rho_function(x, y, ws);
    if (rho <= 0.0) return 0.0;
    auto [gx, gy] = grad(x, y);
    double wn = std::hypot(std::pow(rho, static_cast<double>(ws.w1)) * gx,
                           std::pow(rho, static_cast<double>(ws.w2)) * gy);
    return wn / std::pow(rho, static_cast<double>(ws.d));
}

}  // namespace

void EstimateConfig::validate() const {
    if (!(r0 > 0.0)) throw DomainError("estimate config: r0 must be positive");
    if (!(gamma > 0.0 && gamma < 1.0)) throw DomainError("estimate config: gamma must be in (0,1)");
    if (num_radii < 3) throw DomainError("estimate config: num_radii must be >= 3");
    if (samples_per_circle < 64)
        throw DomainError("estimate config: samples_per_circle must be >= 64");
    if (r0 * std::pow(gamma, num_radii - 1) <= 1e-12)
        throw DomainError("estimate config: smallest radius is below the double-precision floor");
}

double rho_function(double x, double y, const WeightSystem& ws) {
    return std::sqrt(std::pow(std::abs(x), 2.0 / static_cast<double>(ws.w1)) +
                     std::pow(std::abs(y), 2.0 / static_cast<double>(ws.w2)));
}

std::pair<double, double> eval_grad(const BiPoly& p, double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw DomainError("eval_grad: non-finite coordinates");
    return GradEvaluator(p)(x, y);
}

double min_grad_on_circle(const BiPoly& p, double r, const EstimateConfig& cfg) {
    if (!(r > 0.0)) throw DomainError("min_grad_on_circle: radius must be positive");
    GradEvaluator grad(p);
    return min_on_circle(grad, r, sample_angles(cfg.samples_per_circle, cfg.seed));
}

EstimateReport estimate_exponent(const BiPoly& p, const EstimateConfig& cfg,
                                 const std::optional<WeightSystem>& ws) {
    cfg.validate();
    if (p.is_zero() || !p.vanishes_at_origin())
        throw DomainError("estimate_exponent: polynomial must vanish at the origin");

    GradEvaluator grad(p);
    std::vector<double> angles = sample_angles(cfg.samples_per_circle, cfg.seed);

    EstimateReport report;
    double rmin = std::numeric_limits<double>::infinity();
    double rmax = 0.0;
    double r = cfg.r0;
    for (int i = 0; i < cfg.num_radii; ++i, r *= cfg.gamma) {
        double best = min_on_circle(grad, r, angles);
        if (ws) {
            for (double theta : angles) {
                double ratio = weighted_ratio(grad, *ws, r * std::cos(theta), r * std::sin(theta));
                rmin = std::min(rmin, ratio);
                rmax = std::max(rmax, ratio);
            }
        }
        if (best <= kUnderflowFloor) {
            report.warnings.push_back("rung r = " + std::to_string(r) +
                                      " dropped: circle minimum underflowed");
            continue;
        }
        report.radii.push_back(r);
        report.minima.push_back(best);
    }
    if (report.radii.size() < 2)
        throw DomainError("estimate_exponent: degenerate or underflow");

    // Ordinary least squares of log(min) on log(r).
    std::size_t n = report.radii.size();
    double sx = 0, sy = 0;
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        lx[i] = std::log(report.radii[i]);
        ly[i] = std::log(report.minima[i]);
        sx += lx[i];
        sy += ly[i];
    }
    double mx = sx / static_cast<double>(n), my = sy / static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    report.fitted_slope = sxy / sxx;
    double sse = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double resid = ly[i] - my - report.fitted_slope * (lx[i] - mx);
        sse += resid * resid;
    }
    report.slope_stderr = n > 2 ? std::sqrt(sse / (static_cast<double>(n) - 2.0) / sxx) : 0.0;

    if (ws) {
        report.weighted_ratio_min = rmin;
        report.weighted_ratio_max = rmax;
    }
    return report;
}

std::pair<double, double> check_weighted_bounds(const BiPoly& p, const WeightSystem& ws,
                                                const EstimateConfig& cfg) {
    cfg.validate();
    if (p.is_zero()) throw DomainError("check_weighted_bounds: zero polynomial");
    if (!validate_weights(p, ws))
        throw DomainError("check_weighted_bounds: weights do not type the polynomial");

    GradEvaluator grad(p);
    std::vector<double> angles = sample_angles(cfg.samples_per_circle, cfg.seed);
    double rmin = std::numeric_limits<double>::infinity();
    double rmax = 0.0;
    double r = cfg.r0;
    for (int i = 0; i < cfg.num_radii; ++i, r *= cfg.gamma) {
        for (double theta : angles) {
            // Point on the weighted sphere {rho = r}.
            double c = std::cos(theta), s = std::sin(theta);
            double x = std::copysign(std::pow(r * std::abs(c), static_cast<double>(ws.w1)), c);
            double y = std::copysign(std::pow(r * std::abs(s), static_cast<double>(ws.w2)), s);
            double ratio = weighted_ratio(grad, ws, x, y);
            rmin = std::min(rmin, ratio);
            rmax = std::max(rmax, ratio);
        }
    }
    return {rmin, rmax};
}

}  // namespace lojex
