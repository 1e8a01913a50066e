#pragma once

#include <string>
#include <vector>

#include "lojex/rational.hpp"

namespace lojex {

// Dense exact univariate polynomial, coefficients lowest degree first.
// The coefficient list never ends in a zero; the zero polynomial is the
// empty list.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& c);
    // c * u^k
    static UniPoly monomial(const Rational& c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;
    Rational coeff(int k) const;

    UniPoly operator+(const UniPoly& rhs) const;
    UniPoly operator-(const UniPoly& rhs) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& rhs) const;
    UniPoly scaled(const Rational& c) const;

    bool operator==(const UniPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const UniPoly& rhs) const { return !(*this == rhs); }

    UniPoly derivative() const;
    UniPoly monic() const;

    Rational eval(const Rational& u) const;
    double eval(double u) const;

    // Field division: returns (quotient, remainder) with deg rem < deg rhs.
    // rhs must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& rhs) const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Monic gcd via the Euclidean algorithm. Errors if both inputs are zero.
UniPoly uni_gcd(const UniPoly& p, const UniPoly& q);

// Number of distinct real roots of p over the whole real line, by sign
// variations of the Sturm chain at -inf and +inf. Errors on the zero
// polynomial; a nonzero constant has no roots.
int sturm_real_root_count(const UniPoly& p);

// Display form such as "3*u^2 - 1", highest degree first.
std::string format_unipoly(const UniPoly& p, const std::string& var = "u");

}  // namespace lojex
