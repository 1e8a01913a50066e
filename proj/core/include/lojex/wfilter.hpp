#pragma once

#include <map>

#include "lojex/bipoly.hpp"

namespace lojex {

// The type (d; w1, w2): every support exponent (a, b) satisfies
// a*w1 + b*w2 = d.
struct WeightSystem {
    long long w1 = 1;
    long long w2 = 1;
    long long d = 1;
    int heavy_axis = 1;       // axis carrying max(w1, w2); ties resolve to 1
    bool primitive = false;   // gcd(w1, w2, d) == 1

    WeightSystem() = default;
    WeightSystem(long long w1_, long long w2_, long long d_);

    WeightSystem swapped_axes() const { return WeightSystem(w2, w1, d); }
    WeightSystem normalized() const;

    bool operator==(const WeightSystem&) const = default;
};

// Decomposition f = sum_j H_j with each H_j weighted homogeneous of
// degree j.
struct WeightedParts {
    std::map<long long, BiPoly> parts;

    // min support key = d_w(f)
    long long weighted_degree() const;
    BiPoly initial_form() const;
};

// The unique primitive positive solution (w1, w2, d) typing p, if one
// exists. Errors: "not weighted homogeneous" when the support is not
// collinear with a positive normal of that kind, "underdetermined" when
// the support is a single monomial or the support line admits no
// strictly positive integer normal.
WeightSystem infer_weights(const BiPoly& p);

// True iff every support exponent of p lies on the line a*w1 + b*w2 = d.
bool validate_weights(const BiPoly& p, const WeightSystem& ws);

// Split p by weighted degree under (w1, w2).
WeightedParts weighted_parts(const BiPoly& p, long long w1, long long w2);

// d*p == w1*x1*d1p + w2*x2*d2p as an exact identity.
bool check_euler_identity(const BiPoly& p, const WeightSystem& ws);

}  // namespace lojex
