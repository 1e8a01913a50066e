#include "lojex/exponent.hpp"

#include <algorithm>

#include "lojex/error.hpp"

namespace lojex {

namespace {

std::string sigma_label(int sigma) { return sigma > 0 ? "+1" : "-1"; }

// Smallest-magnitude integer probe where g does not vanish. g != 0, so
// at most deg(g) + 1 probes are needed.
Rational nonvanishing_probe(const UniPoly& g) {
    for (long long k = 1;; ++k) {
        for (long long s : {k, -k})
            if (g.eval(Rational(s)) != 0) return Rational(s);
    }
}

PathCandidate make_finite(std::string anchor, long long ord_phi, long long ord_grad) {
    PathCandidate c;
    c.anchor = std::move(anchor);
    c.ord_phi = ord_phi;
    c.ord_grad = ord_grad;
    c.ratio = Rational(ord_grad, ord_phi);
    return c;
}

PathCandidate make_degenerate(std::string anchor, long long ord_phi) {
    PathCandidate c;
    c.anchor = std::move(anchor);
    c.ord_phi = ord_phi;
    c.grad_vanishes = true;
    return c;
}

}  // namespace

std::string case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::contained: return "contained";
        case CaseTag::not_contained: return "not_contained";
        case CaseTag::homogeneous: return "homogeneous";
        case CaseTag::degenerate: return "degenerate";
    }
    return "unknown";
}

ExponentResult lojasiewicz_exponent(const BiPoly& p, const WeightSystem& ws,
                                    const CaseClassification& cls) {
    if (p.is_zero()) throw DomainError("lojasiewicz_exponent: zero polynomial");
    if (!validate_weights(p, ws))
        throw DomainError("inconsistent classification: weights do not type the polynomial");
    if (cls.homogeneous != (ws.w1 == ws.w2) ||
        (ws.w1 != ws.w2 && cls.swapped != (ws.w2 > ws.w1)))
        throw DomainError("inconsistent classification: stale weights");

    ExponentResult res;
    if (!cls.nondegenerate) {
        res.infinite = true;
        res.case_tag = CaseTag::degenerate;
        return res;
    }

    // Oriented heavy-first data
    BiPoly q = cls.swapped ? p.swap_vars() : p;
    WeightSystem wq = cls.swapped ? ws.swapped_axes() : ws;

    bool contained = cls.homogeneous || cls.containment_holds;
    res.case_tag = cls.homogeneous ? CaseTag::homogeneous
                                   : (contained ? CaseTag::contained : CaseTag::not_contained);
    res.value = contained ? Rational(wq.d - wq.w1, wq.w2) : Rational(wq.d - wq.w2, wq.w2);
    res.sufficiency_degree = sufficiency_degree(res.value);

    // Witness path attaining the value.
    BiPoly d1 = q.partial(1);
    if (contained) {
        // Generic anchor (a1, 1) where d1q does not vanish.
        UniPoly g1 = d1.specialize(2, Rational(1));
        if (!g1.is_zero()) {
            Rational a1 = nonvanishing_probe(g1);
            res.witness_path = make_finite(
                "(" + rational_to_string(a1) + ", +1)" + (cls.swapped ? " [axes swapped]" : ""),
                wq.w2, wq.d - wq.w1);
        }
    } else {
        for (int sigma : {+1, -1}) {
            UniPoly slice = d1.specialize(2, Rational(sigma));
            if (!slice.is_zero() && slice.degree() >= 1 && sturm_real_root_count(slice) > 0) {
                res.witness_path = make_finite(
                    "(r, " + sigma_label(sigma) + ") with r a real root of d1p(u, " +
                        sigma_label(sigma) + ") = " + format_unipoly(slice) +
                        (cls.swapped ? " [axes swapped]" : ""),
                    wq.w2, wq.d - wq.w2);
                break;
            }
        }
    }
    return res;
}

PathOracleResult path_oracle(const BiPoly& p, const WeightSystem& ws) {
    if (p.is_zero()) throw DomainError("path_oracle: zero polynomial");
    if (!validate_weights(p, ws))
        throw DomainError("path_oracle: weights do not type the polynomial");
    if (ws.w1 < ws.w2) throw DomainError("path_oracle: axes must be oriented heavy-first");

    const long long w1 = ws.w1, w2 = ws.w2, d = ws.d;
    BiPoly d1 = p.partial(1);
    BiPoly d2 = p.partial(2);

    PathOracleResult out;
    auto add = [&out](PathCandidate c) { out.candidates.push_back(std::move(c)); };

    // Orbit classes with x2 != 0, scaled onto the slices x2 = +-1.
    for (int sigma : {+1, -1}) {
        UniPoly g1 = d1.specialize(2, Rational(sigma));
        UniPoly g2 = d2.specialize(2, Rational(sigma));
        std::string slice_tag = "x2 = " + sigma_label(sigma);

        if (g1.is_zero()) {
            // d1p vanishes on the whole slice; classes split by d2p.
            if (g2.is_zero()) {
                add(make_degenerate("every point on the slice " + slice_tag, w2));
                continue;
            }
            Rational a1 = nonvanishing_probe(g2);
            add(make_finite("(" + rational_to_string(a1) + ", " + sigma_label(sigma) +
                                "), d1p identically zero on the slice",
                            w2, d - w2));
            if (g2.degree() >= 1 && sturm_real_root_count(g2) > 0)
                add(make_degenerate("root class of d2p(u, " + sigma_label(sigma) + ") = " +
                                        format_unipoly(g2) + " (d1p also vanishes)",
                                    w2));
            continue;
        }

        // Root classes of d1p on the slice, partitioned by whether d2p
        // also vanishes there.
        int roots1 = g1.degree() >= 1 ? sturm_real_root_count(g1) : 0;
        if (roots1 > 0) {
            if (g2.is_zero()) {
                add(make_degenerate("root class of d1p(u, " + sigma_label(sigma) + ") = " +
                                        format_unipoly(g1) + " (d2p vanishes on the slice)",
                                    w2));
            } else {
                UniPoly h = uni_gcd(g1, g2);
                int common = h.degree() >= 1 ? sturm_real_root_count(h) : 0;
                if (common > 0)
                    add(make_degenerate("common root class of the partials on " + slice_tag +
                                            ", gcd = " + format_unipoly(h),
                                        w2));
                if (roots1 - common > 0)
                    add(make_finite("root class of d1p(u, " + sigma_label(sigma) + ") = " +
                                        format_unipoly(g1) + " where d2p does not vanish",
                                    w2, d - w2));
            }
        }

        // Generic anchor on the slice where d1p does not vanish.
        Rational a1 = nonvanishing_probe(g1);
        add(make_finite("(" + rational_to_string(a1) + ", " + sigma_label(sigma) + ")", w2,
                        d - w1));
    }

    // Axis anchors. Restrictions to an axis are monomials (or zero), so
    // exact evaluation at +-1 decides each class.
    UniPoly r1 = d1.specialize(2, Rational(0));
    UniPoly r2 = d2.specialize(2, Rational(0));
    for (int s : {+1, -1}) {
        std::string anchor = "(" + sigma_label(s) + ", 0)";
        if (r1.eval(Rational(s)) != 0)
            add(make_finite(anchor, w1, d - w1));
        else if (r2.eval(Rational(s)) != 0)
            add(make_finite(anchor, w1, d - w2));
        else
            add(make_degenerate(anchor, w1));
    }
    UniPoly c1 = d1.specialize(1, Rational(0));
    UniPoly c2 = d2.specialize(1, Rational(0));
    for (int s : {+1, -1}) {
        std::string anchor = "(0, " + sigma_label(s) + ")";
        if (c1.eval(Rational(s)) != 0)
            add(make_finite(anchor, w2, d - w1));
        else if (c2.eval(Rational(s)) != 0)
            add(make_finite(anchor, w2, d - w2));
        else
            add(make_degenerate(anchor, w2));
    }

    out.max_infinite = false;
    bool have = false;
    for (const auto& c : out.candidates) {
        if (c.grad_vanishes) {
            out.max_infinite = true;
        } else if (!have || c.ratio > out.max_ratio) {
            out.max_ratio = c.ratio;
            have = true;
        }
    }
    return out;
}

Rational complex_exponent(const std::vector<long long>& weights, long long d) {
    if (weights.empty()) throw DomainError("complex_exponent: empty weight list");
    std::optional<Rational> best;
    for (long long w : weights) {
        if (w < 1) throw DomainError("complex_exponent: weights must be positive");
        Rational v = Rational(d, w) - 1;
        if (!best || v > *best) best = v;
    }
    if (d < *std::max_element(weights.begin(), weights.end()))
        throw DomainError("complex_exponent: degree below the largest weight");
    return *best;
}

long long sufficiency_degree(const Rational& exponent) {
    if (exponent < 0) throw DomainError("sufficiency_degree: negative exponent");
    return rational_floor(exponent).template convert_to<long long>() + 1;
}

}  // namespace lojex
