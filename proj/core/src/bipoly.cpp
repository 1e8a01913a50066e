#include "lojex/bipoly.hpp"

#include <algorithm>

#include "lojex/error.hpp"

namespace lojex {

namespace {

Rational rational_pow(const Rational& base, int n) {
    Rational acc(1);
    Rational b = base;
    int e = n;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

}  // namespace

BiPoly BiPoly::constant(const Rational& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(int a, int b, const Rational& c) {
    BiPoly p;
    if (a < 0 || b < 0) throw DomainError("negative exponent in monomial");
    if (c != 0) p.terms_[{a, b}] = c;
    return p;
}

BiPoly BiPoly::from_terms(TermMap terms) {
    BiPoly p;
    for (auto& [e, c] : terms) {
        if (e.first < 0 || e.second < 0) throw DomainError("negative exponent in term map");
        if (c != 0) p.terms_[e] = std::move(c);
    }
    return p;
}

Rational BiPoly::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

BiPoly BiPoly::operator+(const BiPoly& rhs) const {
    BiPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = out.terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& rhs) const { return *this + (-rhs); }

BiPoly BiPoly::operator-() const {
    BiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

BiPoly BiPoly::operator*(const BiPoly& rhs) const {
    BiPoly out;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            ExponentPair e{e1.first + e2.first, e1.second + e2.second};
            Rational prod = c1 * c2;
            auto [it, inserted] = out.terms_.try_emplace(e, prod);
            if (!inserted) {
                it->second += prod;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

BiPoly BiPoly::scaled(const Rational& c) const {
    BiPoly out;
    if (c == 0) return out;
    out = *this;
    for (auto& [e, v] : out.terms_) v *= c;
    return out;
}

BiPoly BiPoly::pow(int n) const {
    if (n < 0) throw DomainError("negative power");
    BiPoly acc = constant(Rational(1));
    BiPoly base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

BiPoly BiPoly::partial(int axis) const {
    if (axis != 1 && axis != 2) throw DomainError("axis must be 1 or 2");
    BiPoly out;
    for (const auto& [e, c] : terms_) {
        int k = (axis == 1) ? e.first : e.second;
        if (k == 0) continue;
        ExponentPair de = (axis == 1) ? ExponentPair{e.first - 1, e.second}
                                      : ExponentPair{e.first, e.second - 1};
        out.terms_[de] = c * Rational(k);
    }
    return out;
}

UniPoly BiPoly::specialize(int axis, const Rational& value) const {
    if (axis != 1 && axis != 2) throw DomainError("axis must be 1 or 2");
    std::map<int, Rational> dense;
    for (const auto& [e, c] : terms_) {
        int keep = (axis == 1) ? e.second : e.first;
        int sub = (axis == 1) ? e.first : e.second;
        Rational v = c * rational_pow(value, sub);
        if (v == 0) continue;
        dense[keep] += v;
    }
    int deg = -1;
    for (const auto& [k, v] : dense)
        if (v != 0) deg = std::max(deg, k);
    if (deg < 0) return UniPoly();
    std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (const auto& [k, v] : dense) coeffs[static_cast<std::size_t>(k)] = v;
    return UniPoly(std::move(coeffs));
}

BiPoly BiPoly::swap_vars() const {
    BiPoly out;
    for (const auto& [e, c] : terms_) out.terms_[{e.second, e.first}] = c;
    return out;
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_)
        acc += c * rational_pow(x, e.first) * rational_pow(y, e.second);
    return acc;
}

}  // namespace lojex
