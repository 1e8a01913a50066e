#pragma once

// Random inputs and independent oracles shared across the test suites.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "lojex/bipoly.hpp"
#include "lojex/unipoly.hpp"
#include "lojex/wfilter.hpp"

namespace lojex::testing {

inline Rational random_small_rational(std::mt19937_64& rng, bool allow_zero = true) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    int n = num(rng);
    while (!allow_zero && n == 0) n = num(rng);
    return Rational(n, den(rng));
}

inline BiPoly random_bipoly(std::mt19937_64& rng, int max_degree = 6, int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(0, max_degree);
    BiPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        p = p + BiPoly::monomial(expo(rng), expo(rng), random_small_rational(rng));
    return p;
}

// All lattice points (a, b) >= 0 with a*w1 + b*w2 == d.
inline std::vector<ExponentPair> support_line(long long w1, long long w2, long long d) {
    std::vector<ExponentPair> pts;
    for (long long a = 0; a * w1 <= d; ++a) {
        long long rest = d - a * w1;
        if (rest % w2 == 0) pts.push_back({static_cast<int>(a), static_cast<int>(rest / w2)});
    }
    return pts;
}

struct WeightedSample {
    BiPoly poly;
    WeightSystem ws;
};

// Random weighted homogeneous polynomial with >= 2 support monomials.
// Weights are <= max_weight, d <= max_degree; orientation is random.
inline WeightedSample random_weighted_homogeneous(std::mt19937_64& rng, long long max_weight = 6,
                                                  long long max_degree = 40) {
    std::uniform_int_distribution<long long> wdist(1, max_weight);
    for (;;) {
        long long w1 = wdist(rng), w2 = wdist(rng);
        std::uniform_int_distribution<long long> ddist(std::max(w1, w2), max_degree);
        long long d = ddist(rng);
        auto pts = support_line(w1, w2, d);
        if (pts.size() < 2) continue;
        std::shuffle(pts.begin(), pts.end(), rng);
        std::uniform_int_distribution<std::size_t> ndist(2, pts.size());
        std::size_t n = ndist(rng);
        BiPoly p;
        for (std::size_t i = 0; i < n; ++i)
            p = p + BiPoly::monomial(pts[i].first, pts[i].second,
                                     random_small_rational(rng, /*allow_zero=*/false));
        if (p.term_count() < 2) continue;
        return {p, WeightSystem(w1, w2, d)};
    }
}

// Brute-force real root counter per the stated oracle: sample on a grid
// over the Cauchy bound interval, count sign changes, confirm each by
// bisection. Valid for polynomials whose real roots are simple and
// separated by more than min_sep.
inline int grid_bisection_root_count(const UniPoly& p, double min_sep = 1e-3) {
    double lead = std::abs(rational_to_double(p.leading()));
    double bound = 1.0;
    for (const auto& c : p.coeffs())
        bound = std::max(bound, std::abs(rational_to_double(c)) / lead);
    bound += 1.0;

    double step = min_sep / 4.0;
    int count = 0;
    double prev_x = -bound;
    double prev_v = p.eval(prev_x);
    for (double x = -bound + step; x <= bound + step; x += step) {
        double v = p.eval(x);
        if (prev_v == 0.0) {
            ++count;  // grid hit a root exactly
            prev_v = v;
            prev_x = x;
            continue;
        }
        if (v != 0.0 && std::signbit(v) != std::signbit(prev_v)) {
            // bisect to confirm the bracket tightens onto a root
            double lo = prev_x, hi = x, flo = prev_v;
            for (int i = 0; i < 80 && hi - lo > 1e-14; ++i) {
                double mid = 0.5 * (lo + hi);
                double fm = p.eval(mid);
                if (fm == 0.0) break;
                if (std::signbit(fm) == std::signbit(flo)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            ++count;
        }
        prev_v = v;
        prev_x = x;
    }
    return count;
}

// Random polynomial of degree <= 6 with known simple real roots drawn
// from a 1/64 grid (pairwise separation >= 1/64 > 1e-3), padded with
// positive-definite quadratic factors.
struct KnownRootPoly {
    UniPoly poly;
    int real_roots;
};

inline KnownRootPoly random_known_root_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nroots(0, 4);
    std::uniform_int_distribution<int> grid(-256, 256);  // roots in [-4, 4]
    int k = nroots(rng);
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < k) {
        int g = grid(rng);
        bool dup = false;
        for (int c : chosen) dup = dup || c == g;
        if (!dup) chosen.push_back(g);
    }
    UniPoly p = UniPoly::constant(random_small_rational(rng, /*allow_zero=*/false));
    for (int g : chosen)
        p = p * UniPoly({Rational(-g, 64), Rational(1)});
    std::uniform_int_distribution<int> nquad(0, (6 - k) / 2);
    int q = nquad(rng);
    for (int i = 0; i < q; ++i) {
        Rational center = random_small_rational(rng);
        Rational offset = Rational(1) + random_small_rational(rng) * random_small_rational(rng);
        if (offset <= 0) offset = Rational(1, 2);
        // (u - c)^2 + offset, no real roots
        UniPoly lin({-center, Rational(1)});
        p = p * (lin * lin + UniPoly::constant(offset));
    }
    return {p, k};
}

}  // namespace lojex::testing
