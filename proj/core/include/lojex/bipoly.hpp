#pragma once

#include <map>
#include <utility>

#include "lojex/rational.hpp"
#include "lojex/unipoly.hpp"

namespace lojex {

// Exponent pair (a, b) of a monomial x^a * y^b.
using ExponentPair = std::pair<int, int>;

// Sparse exact bivariate polynomial. Invariant: no stored coefficient is
// zero; the zero polynomial is the empty map.
class BiPoly {
  public:
    using TermMap = std::map<ExponentPair, Rational>;

    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }
    static BiPoly constant(const Rational& c);
    static BiPoly monomial(int a, int b, const Rational& c);
    static BiPoly from_terms(TermMap terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(int a, int b) const;
    bool vanishes_at_origin() const { return coeff(0, 0) == 0; }
    int total_degree() const;

    BiPoly operator+(const BiPoly& rhs) const;
    BiPoly operator-(const BiPoly& rhs) const;
    BiPoly operator-() const;
    BiPoly operator*(const BiPoly& rhs) const;
    BiPoly scaled(const Rational& c) const;
    BiPoly pow(int n) const;

    bool operator==(const BiPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const BiPoly& rhs) const { return !(*this == rhs); }

    // Formal partial derivative; axis is 1 (x) or 2 (y).
    BiPoly partial(int axis) const;

    // Substitute value into the chosen axis; result is univariate in the
    // remaining variable.
    UniPoly specialize(int axis, const Rational& value) const;

    // Exchange the roles of the two variables.
    BiPoly swap_vars() const;

    Rational eval(const Rational& x, const Rational& y) const;

  private:
    TermMap terms_;
};

}  // namespace lojex
