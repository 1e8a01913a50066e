#include "lojex/signature.hpp"

#include "lojex/error.hpp"

namespace lojex {

namespace {

std::string sigma_label(int sigma) { return sigma > 0 ? "+1" : "-1"; }

// Common real zeros of the partials on the slice x2 = sigma; any real
// zero with x2 != 0 scales onto one of these slices under the weighted
// action, since both partials are weighted homogeneous.
bool slice_has_common_zero(const UniPoly& g1, const UniPoly& g2, int sigma,
                           std::vector<std::string>& diags) {
    if (g1.is_zero() && g2.is_zero()) {
        diags.push_back("both partials vanish on the whole slice x2 = " + sigma_label(sigma));
        return true;
    }
    if (g1.is_zero() || g2.is_zero()) {
        const UniPoly& other = g1.is_zero() ? g2 : g1;
        const char* which = g1.is_zero() ? "d1p" : "d2p";
        if (other.degree() >= 1 && sturm_real_root_count(other) > 0) {
            diags.push_back(std::string(which) + " vanishes on the slice x2 = " +
                            sigma_label(sigma) + " and the other partial has a real root there");
            return true;
        }
        return false;
    }
    UniPoly h = uni_gcd(g1, g2);
    if (h.degree() >= 1 && sturm_real_root_count(h) > 0) {
        diags.push_back("gcd of the partials on the slice x2 = " + sigma_label(sigma) + " is " +
                        format_unipoly(h) + ", which has a real root");
        return true;
    }
    return false;
}

}  // namespace

CheckResult is_nondegenerate(const BiPoly& p, const WeightSystem& ws) {
    if (p.is_zero()) throw DomainError("is_nondegenerate: zero polynomial");
    if (!p.vanishes_at_origin())
        throw DomainError("is_nondegenerate: polynomial does not vanish at the origin");
    if (!validate_weights(p, ws))
        throw DomainError("is_nondegenerate: weights do not type the polynomial");

    CheckResult res;
    BiPoly d1 = p.partial(1);
    BiPoly d2 = p.partial(2);

    if (d1.is_zero()) {
        res.diagnostics.push_back("d1p is identically zero: p depends on x2 only, "
                                  "critical set contains the x1 axis");
        return res;
    }
    if (d2.is_zero()) {
        res.diagnostics.push_back("d2p is identically zero: p depends on x1 only, "
                                  "critical set contains the x2 axis");
        return res;
    }

    // (a) zeros with x2 != 0, reduced to the slices x2 = +-1
    for (int sigma : {+1, -1}) {
        UniPoly g1 = d1.specialize(2, Rational(sigma));
        UniPoly g2 = d2.specialize(2, Rational(sigma));
        if (slice_has_common_zero(g1, g2, sigma, res.diagnostics)) return res;
    }

    // (b) axis x2 = 0, x1 != 0: each restriction is a monomial or zero,
    // so both vanish at a nonzero x1 iff both restrictions are zero.
    if (d1.specialize(2, Rational(0)).is_zero() && d2.specialize(2, Rational(0)).is_zero()) {
        res.diagnostics.push_back("gradient vanishes on the axis x2 = 0");
        return res;
    }

    // (c) axis x1 = 0, x2 != 0
    if (d1.specialize(1, Rational(0)).is_zero() && d2.specialize(1, Rational(0)).is_zero()) {
        res.diagnostics.push_back("gradient vanishes on the axis x1 = 0");
        return res;
    }

    res.value = true;
    return res;
}

CheckResult containment_condition(const BiPoly& p, const WeightSystem& ws) {
    if (p.is_zero()) throw DomainError("containment_condition: zero polynomial");
    if (!validate_weights(p, ws))
        throw DomainError("containment_condition: weights do not type the polynomial");
    if (ws.w1 < ws.w2)
        throw DomainError("containment_condition: axes must be oriented heavy-first");

    CheckResult res;
    BiPoly d1 = p.partial(1);
    if (d1.is_zero()) {
        res.diagnostics.push_back("d1p is identically zero: containment condition inapplicable "
                                  "(input is degenerate)");
        return res;
    }
    res.value = true;
    for (int sigma : {+1, -1}) {
        UniPoly slice = d1.specialize(2, Rational(sigma));
        if (slice.is_zero()) {
            res.diagnostics.push_back("d1p vanishes on the whole slice x2 = " +
                                      sigma_label(sigma));
            res.value = false;
            continue;
        }
        int roots = slice.degree() >= 1 ? sturm_real_root_count(slice) : 0;
        if (roots > 0) {
            res.diagnostics.push_back("d1p(u, " + sigma_label(sigma) + ") = " +
                                      format_unipoly(slice) + " has " + std::to_string(roots) +
                                      " real root" + (roots == 1 ? "" : "s"));
            res.value = false;
        }
    }
    return res;
}

CaseClassification classify(const BiPoly& p, const WeightSystem& ws) {
    if (p.is_zero()) throw DomainError("classify: zero polynomial");
    if (!p.vanishes_at_origin())
        throw DomainError("classify: polynomial does not vanish at the origin");
    if (!validate_weights(p, ws))
        throw DomainError("classify: weights do not type the polynomial");

    CaseClassification cls;
    cls.swapped = ws.w2 > ws.w1;
    cls.homogeneous = ws.w1 == ws.w2;

    BiPoly q = cls.swapped ? p.swap_vars() : p;
    WeightSystem wq = cls.swapped ? ws.swapped_axes() : ws;

    CheckResult nd = is_nondegenerate(q, wq);
    cls.nondegenerate = nd.value;
    cls.diagnostics.insert(cls.diagnostics.end(), nd.diagnostics.begin(), nd.diagnostics.end());

    CheckResult ct = containment_condition(q, wq);
    cls.containment_holds = ct.value;
    if (!ct.value)
        cls.diagnostics.insert(cls.diagnostics.end(), ct.diagnostics.begin(),
                               ct.diagnostics.end());
    return cls;
}

}  // namespace lojex
