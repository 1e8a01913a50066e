#include "doctest.h"

#include "lojex/bipoly.hpp"
#include "lojex/error.hpp"
#include "lojex/parse.hpp"
#include "lojex/unipoly.hpp"
#include "support/generators.hpp"

using namespace lojex;

namespace {
BiPoly P(const std::string& s) { return parse_polynomial(s); }
UniPoly U(std::vector<Rational> c) { return UniPoly(std::move(c)); }
}  // namespace

TEST_CASE("bipoly arithmetic examples") {
    CHECK(P("x + y") + P("x - y") == P("2*x"));
    CHECK((P("x + y") * BiPoly::zero()).is_zero());
    CHECK(P("y") * P("x^5 + x*y^12 + y^15") == P("x^5*y + x*y^13 + y^16"));
}

TEST_CASE("partial derivatives") {
    CHECK(P("x^3 + x*y^6 + y^9").partial(1) == P("3*x^2 + y^6"));
    CHECK(P("x^3").partial(2).is_zero());
    CHECK(P("x^3 - x*y^6 + y^9").partial(1) == P("3*x^2 - y^6"));
}

TEST_CASE("specialize") {
    CHECK(P("3*x^2 + y^6").specialize(2, Rational(1)) == U({Rational(1), Rational(0), Rational(3)}));
    CHECK(P("3*x^2 - y^6").specialize(2, Rational(-1)) ==
          U({Rational(-1), Rational(0), Rational(3)}));
    CHECK(P("x*y").specialize(1, Rational(0)).is_zero());
}

TEST_CASE("uni_gcd") {
    UniPoly a = U({Rational(-1), Rational(0), Rational(1)});  // u^2 - 1
    UniPoly b = U({Rational(-1), Rational(1)});               // u - 1
    CHECK(uni_gcd(a, b) == b);
    UniPoly c = U({Rational(-1), Rational(0), Rational(3)});  // 3u^2 - 1
    UniPoly d = U({Rational(9), Rational(-6)});               // -6u + 9
    CHECK(uni_gcd(c, d) == UniPoly::constant(Rational(1)));
    UniPoly u3 = UniPoly::monomial(Rational(1), 3);
    UniPoly u2 = UniPoly::monomial(Rational(1), 2);
    CHECK(uni_gcd(u3, u2) == u2);
    CHECK_THROWS_AS(uni_gcd(UniPoly(), UniPoly()), DomainError);
}

TEST_CASE("sturm_real_root_count examples") {
    CHECK(sturm_real_root_count(U({Rational(1), Rational(0), Rational(1)})) == 0);   // u^2+1
    CHECK(sturm_real_root_count(U({Rational(-1), Rational(0), Rational(1)})) == 2);  // u^2-1
    CHECK(sturm_real_root_count(
              U({Rational(1), Rational(0), Rational(0), Rational(0), Rational(5)})) == 0);
    CHECK(sturm_real_root_count(U({Rational(-1), Rational(0), Rational(3)})) == 2);
    CHECK_THROWS_AS(sturm_real_root_count(UniPoly()), DomainError);
}

TEST_CASE("sturm counts distinct roots regardless of multiplicity") {
    UniPoly lin = U({Rational(-1), Rational(1)});
    CHECK(sturm_real_root_count(lin * lin) == 1);
    CHECK(sturm_real_root_count(lin * lin * lin) == 1);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        BiPoly a = testing::random_bipoly(rng);
        BiPoly b = testing::random_bipoly(rng);
        BiPoly c = testing::random_bipoly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * b == b * a);
    }
}

TEST_CASE("mixed partials commute") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        BiPoly p = testing::random_bipoly(rng, 8, 8);
        CHECK(p.partial(1).partial(2) == p.partial(2).partial(1));
    }
}

TEST_CASE("gcd divides both inputs exactly") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 150; ++i) {
        UniPoly p = testing::random_known_root_poly(rng).poly;
        UniPoly q = testing::random_known_root_poly(rng).poly;
        if (p.is_zero() || q.is_zero()) continue;
        UniPoly g = uni_gcd(p, q);
        CHECK(p.divmod(g).second.is_zero());
        CHECK(q.divmod(g).second.is_zero());
        CHECK(g.degree() <= std::min(p.degree(), q.degree()));
    }
}

TEST_CASE("sturm count agrees with grid+bisection oracle") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        auto [p, expected] = testing::random_known_root_poly(rng);
        CHECK(sturm_real_root_count(p) == expected);
        CHECK(testing::grid_bisection_root_count(p) == expected);
    }
}
