#include "doctest.h"

#include "lojex/error.hpp"
#include "lojex/parse.hpp"
#include "lojex/wfilter.hpp"
#include "support/generators.hpp"

using namespace lojex;

namespace {
BiPoly P(const std::string& s) { return parse_polynomial(s); }
}  // namespace

TEST_CASE("infer_weights on the worked examples") {
    WeightSystem ws = infer_weights(P("x^3 + x*y^6 + y^9"));
    CHECK(ws.w1 == 3);
    CHECK(ws.w2 == 1);
    CHECK(ws.d == 9);
    CHECK(ws.heavy_axis == 1);
    CHECK(ws.primitive);

    WeightSystem ws2 = infer_weights(P("x^5*y + x*y^13 + y^16"));
    CHECK(ws2.w1 == 3);
    CHECK(ws2.w2 == 1);
    CHECK(ws2.d == 16);

    WeightSystem ws3 = infer_weights(P("x^2 + y^2"));
    CHECK(ws3.w1 == 1);
    CHECK(ws3.w2 == 1);
    CHECK(ws3.d == 2);
}

TEST_CASE("infer_weights errors") {
    CHECK_THROWS_WITH_AS(infer_weights(P("x^2 + y^3 + x*y")),
                         doctest::Contains("not weighted homogeneous"), DomainError);
    CHECK_THROWS_WITH_AS(infer_weights(P("x^2*y^3")), doctest::Contains("underdetermined"),
                         DomainError);
    CHECK_THROWS_WITH_AS(infer_weights(P("x + x^2*y")), doctest::Contains("underdetermined"),
                         DomainError);
    CHECK_THROWS_AS(infer_weights(BiPoly::zero()), DomainError);
    CHECK_THROWS_AS(infer_weights(P("1 + x")), DomainError);  // does not vanish at 0
}

TEST_CASE("validate_weights") {
    BiPoly f = P("x^3 + x*y^6 + y^9");
    CHECK(validate_weights(f, WeightSystem(3, 1, 9)));
    CHECK_FALSE(validate_weights(f, WeightSystem(1, 1, 3)));
    for (long long k : {1, 2, 3})
        CHECK(validate_weights(P("x*y"), WeightSystem(k, k, 2 * k)));
}

TEST_CASE("weighted_parts") {
    WeightedParts parts = weighted_parts(P("x^2 + y^3 + x*y"), 1, 1);
    CHECK(parts.parts.size() == 2);
    CHECK(parts.parts.at(2) == P("x^2 + x*y"));
    CHECK(parts.parts.at(3) == P("y^3"));
    CHECK(parts.weighted_degree() == 2);

    WeightedParts single = weighted_parts(P("x^3 + y^2"), 2, 3);
    CHECK(single.parts.size() == 1);
    CHECK(single.parts.at(6) == P("x^3 + y^2"));
}

TEST_CASE("euler identity examples") {
    CHECK(check_euler_identity(P("x*y"), WeightSystem(1, 1, 2)));
    CHECK(check_euler_identity(P("x^3 + x*y^6 + y^9"), WeightSystem(3, 1, 9)));
    CHECK_FALSE(check_euler_identity(P("x^3 + y^2"), WeightSystem(3, 1, 9)));
}

TEST_CASE("euler identity holds for random weighted homogeneous polynomials") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 300; ++i) {
        auto [p, ws] = testing::random_weighted_homogeneous(rng);
        CHECK(check_euler_identity(p, ws));
        WeightSystem inferred = infer_weights(p);
        CHECK(check_euler_identity(p, inferred));
    }
}

TEST_CASE("inference is scale-canonical") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        auto [p, ws] = testing::random_weighted_homogeneous(rng, 4, 24);
        WeightSystem base = infer_weights(p);
        for (long long k : {2, 3}) {
            WeightSystem scaled(k * ws.w1, k * ws.w2, k * ws.d);
            CHECK(validate_weights(p, scaled));
            CHECK(scaled.normalized().w1 * base.w2 == base.w1 * scaled.normalized().w2);
        }
        CHECK(base.primitive);
    }
}

TEST_CASE("weighted parts sum back to the input") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; ++i) {
        BiPoly p = testing::random_bipoly(rng, 7, 7);
        if (p.is_zero()) continue;
        WeightedParts parts = weighted_parts(p, 2, 3);
        BiPoly sum;
        for (const auto& [j, part] : parts.parts) {
            if (j >= 1) CHECK(validate_weights(part, WeightSystem(2, 3, j)));
            sum = sum + part;
        }
        CHECK(sum == p);
    }
}
