#include "lojex/unipoly.hpp"

#include <cmath>
#include <utility>

#include "lojex/error.hpp"

namespace lojex {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) {
    if (c == 0) return UniPoly();
    return UniPoly({c});
}

UniPoly UniPoly::monomial(const Rational& c, int k) {
    if (c == 0) return UniPoly();
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UniPoly::leading() const {
    if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const { return *this + (-rhs); }

UniPoly UniPoly::operator-() const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c = -c;
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return UniPoly();
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rational& c) const {
    if (c == 0) return UniPoly();
    std::vector<Rational> out = coeffs_;
    for (auto& x : out) x *= c;
    return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return scaled(Rational(1) / leading());
}

Rational UniPoly::eval(const Rational& u) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

double UniPoly::eval(double u) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * u + rational_to_double(*it);
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& rhs) const {
    if (rhs.is_zero()) throw DomainError("division by zero polynomial");
    std::vector<Rational> rem = coeffs_;
    int dq = degree() - rhs.degree();
    if (dq < 0) return {UniPoly(), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1, Rational(0));
    const Rational& lead = rhs.leading();
    for (int k = dq; k >= 0; --k) {
        std::size_t top = static_cast<std::size_t>(k + rhs.degree());
        if (top >= rem.size() || rem[top] == 0) continue;
        Rational factor = rem[top] / lead;
        quot[static_cast<std::size_t>(k)] = factor;
        for (int j = 0; j <= rhs.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= factor * rhs.coeffs()[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly uni_gcd(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero()) throw DomainError("gcd undefined for two zero polynomials");
    UniPoly a = p, b = q;
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

int sign_at_plus_inf(const UniPoly& p) { return sign_of(p.leading()); }

int sign_at_minus_inf(const UniPoly& p) {
    int s = sign_of(p.leading());
    return (p.degree() % 2 == 0) ? s : -s;
}

int variations(const std::vector<int>& signs) {
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

int sturm_real_root_count(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("sturm_real_root_count: zero polynomial");
    if (p.degree() == 0) return 0;

    // Signed remainder chain, truncated at the first zero remainder.
    std::vector<UniPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero()) {
        const UniPoly& a = chain[chain.size() - 2];
        const UniPoly& b = chain.back();
        UniPoly r = a.divmod(b).second;
        chain.push_back(-r);
    }
    chain.pop_back();

    std::vector<int> lo, hi;
    lo.reserve(chain.size());
    hi.reserve(chain.size());
    for (const auto& q : chain) {
        lo.push_back(sign_at_minus_inf(q));
        hi.push_back(sign_at_plus_inf(q));
    }
    return variations(lo) - variations(hi);
}

std::string format_unipoly(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1 || k == 0) {
            out += rational_to_string(mag);
            if (k > 0) out += "*";
        }
        if (k > 0) {
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace lojex

