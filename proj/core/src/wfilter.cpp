#include "lojex/wfilter.hpp"

#include <numeric>

#include "lojex/error.hpp"

namespace lojex {

WeightSystem::WeightSystem(long long w1_, long long w2_, long long d_)
    : w1(w1_), w2(w2_), d(d_) {
    if (w1 < 1 || w2 < 1 || d < 1)
        throw DomainError("weights and degree must be positive integers");
    heavy_axis = (w2 > w1) ? 2 : 1;
    long long g = std::gcd(std::gcd(w1, w2), d);
    primitive = (g == 1);
}

WeightSystem WeightSystem::normalized() const {
    long long g = std::gcd(std::gcd(w1, w2), d);
    return WeightSystem(w1 / g, w2 / g, d / g);
}

long long WeightedParts::weighted_degree() const {
    if (parts.empty()) throw DomainError("weighted degree of zero polynomial");
    return parts.begin()->first;
}

BiPoly WeightedParts::initial_form() const {
    if (parts.empty()) throw DomainError("initial form of zero polynomial");
    return parts.begin()->second;
}

WeightSystem infer_weights(const BiPoly& p) {
    if (p.is_zero()) throw DomainError("infer_weights: zero polynomial");
    if (!p.vanishes_at_origin())
        throw DomainError("infer_weights: polynomial does not vanish at the origin");
    if (p.term_count() < 2)
        throw DomainError("underdetermined: single monomial admits any positive weights");

    auto it = p.terms().begin();
    ExponentPair p0 = it->first;
    ++it;
    ExponentPair p1 = it->first;
    long long da = p1.first - p0.first;
    long long db = p1.second - p0.second;

    // Strictly positive normal (w1, w2) to the support direction.
    long long w1, w2;
    if (da == 0 || db == 0 || (da > 0) == (db > 0))
        throw DomainError("underdetermined: support line admits no strictly positive normal");
    w1 = db > 0 ? db : -db;
    w2 = da > 0 ? da : -da;
    long long g = std::gcd(w1, w2);
    w1 /= g;
    w2 /= g;

    long long d = p0.first * w1 + p0.second * w2;
    if (d < 1) throw DomainError("underdetermined: inferred degree is not positive");
    WeightSystem ws(w1, w2, d);
    if (!validate_weights(p, ws))
        throw DomainError("not weighted homogeneous: support exponents are not collinear");
    return ws.normalized();
}

bool validate_weights(const BiPoly& p, const WeightSystem& ws) {
    if (p.is_zero()) throw DomainError("validate_weights: zero polynomial");
    for (const auto& [e, c] : p.terms())
        if (e.first * ws.w1 + e.second * ws.w2 != ws.d) return false;
    return true;
}

WeightedParts weighted_parts(const BiPoly& p, long long w1, long long w2) {
    if (p.is_zero()) throw DomainError("weighted_parts: zero polynomial");
    if (w1 < 1 || w2 < 1) throw DomainError("weights must be positive");
    WeightedParts out;
    for (const auto& [e, c] : p.terms()) {
        long long j = e.first * w1 + e.second * w2;
        out.parts[j] = out.parts[j] + BiPoly::monomial(e.first, e.second, c);
    }
    return out;
}

bool check_euler_identity(const BiPoly& p, const WeightSystem& ws) {
    BiPoly lhs = p.scaled(Rational(ws.d));
    BiPoly x1d1 = BiPoly::monomial(1, 0, Rational(ws.w1)) * p.partial(1);
    BiPoly x2d2 = BiPoly::monomial(0, 1, Rational(ws.w2)) * p.partial(2);
    return lhs == x1d1 + x2d2;
}

}  // namespace lojex
