#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lojex/bipoly.hpp"
#include "lojex/signature.hpp"
#include "lojex/wfilter.hpp"

namespace lojex {

enum class CaseTag { contained, not_contained, homogeneous, degenerate };

std::string case_tag_name(CaseTag tag);

// A monomial-path candidate t . a = (t^w1 a1, t^w2 a2) for the supremum
// of ord(grad f(phi)) / ord(phi). The anchor is an orbit class: a
// rational probe point, a symbolic root class of a named slice
// polynomial, or an axis point.
struct PathCandidate {
    std::string anchor;
    long long ord_phi = 0;
    bool grad_vanishes = false;  // ord_grad = +inf on the whole orbit
    long long ord_grad = 0;      // valid when !grad_vanishes
    Rational ratio;              // ord_grad / ord_phi, when finite
};

struct ExponentResult {
    bool infinite = false;       // iff degenerate
    Rational value;              // valid when !infinite
    CaseTag case_tag = CaseTag::degenerate;
    std::optional<PathCandidate> witness_path;
    std::optional<long long> sufficiency_degree;  // floor(L) + 1, finite case
};

struct PathOracleResult {
    std::vector<PathCandidate> candidates;
    bool max_infinite = false;
    Rational max_ratio;  // valid when !max_infinite
};

// Closed-form exponent: +inf when degenerate; d/w2 - 1 in the
// homogeneous case; otherwise (d - w1)/w2 when the containment condition
// holds and d/w2 - 1 when it does not. Expects cls computed for (p, ws);
// throws on an inconsistent classification.
ExponentResult lojasiewicz_exponent(const BiPoly& p, const WeightSystem& ws,
                                    const CaseClassification& cls);

// Exact enumeration of monomial-path orbit classes and their order
// ratios. The maximum ratio is a lower bound for the exponent and, for
// nondegenerate weighted homogeneous input, equals it. Requires p
// weighted homogeneous for ws with axes oriented heavy-first.
PathOracleResult path_oracle(const BiPoly& p, const WeightSystem& ws);

// max_i (d / w_i - 1), the complex-case formula in any number of
// variables.
Rational complex_exponent(const std::vector<long long>& weights, long long d);

// floor(L) + 1
long long sufficiency_degree(const Rational& exponent);

}  // namespace lojex
