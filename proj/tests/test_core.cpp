#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"

using namespace grakit;
using testutil::pp;
using testutil::random_poly;

TEST_CASE("prime field validation") {
    CHECK_THROWS_AS(PrimeField(2), input_error);
    CHECK_THROWS_AS(PrimeField(1), input_error);
    CHECK_THROWS_AS(PrimeField(91), input_error);  // 7 * 13
    CHECK_NOTHROW(PrimeField(3));
    CHECK_NOTHROW(PrimeField(32003));
}

TEST_CASE("field arithmetic") {
    PrimeField F(32003);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint32_t> d(1, 32002);
    for (int t = 0; t < 500; ++t) {
        Fp a = d(rng);
        CHECK(F.mul(a, F.inv(a)) == 1);
        Fp b = d(rng);
        CHECK(F.sub(F.add(a, b), b) == a);
        CHECK(F.add(a, F.neg(a)) == 0);
    }
    CHECK(F.from_int(-1) == 32002);
    CHECK(F.from_int(32003) == 0);
    CHECK(F.pow(5, 32002) == 1);
}

TEST_CASE("term order is a degree-compatible total order") {
    std::vector<int> w{1, 1, 2};
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::uint32_t> e(0, 4);
    auto rand_mon = [&] {
        Monomial m(3);
        for (auto& x : m) x = e(rng);
        return m;
    };
    for (int t = 0; t < 2000; ++t) {
        Monomial a = rand_mon(), b = rand_mon(), c = rand_mon();
        int ab = term_order_compare(a, b, w);
        // antisymmetry
        CHECK(term_order_compare(b, a, w) == -ab);
        CHECK((ab == 0) == (a == b));
        // degree compatibility
        if (weighted_degree(a, w) > weighted_degree(b, w)) CHECK(ab > 0);
        // multiplicativity
        CHECK(term_order_compare(mon_mul(a, c), mon_mul(b, c), w) == ab);
        // transitivity
        int bc = term_order_compare(b, c, w);
        if (ab > 0 && bc > 0) CHECK(term_order_compare(a, c, w) > 0);
    }
    // 1 is the least monomial
    Monomial one(3, 0);
    Monomial x{1, 0, 0};
    CHECK(term_order_compare(x, one, w) > 0);
}

TEST_CASE("grevlex tiebreak") {
    std::vector<int> w{1, 1};
    // x^2 > x*y > y^2 at equal degree
    CHECK(term_order_compare({2, 0}, {1, 1}, w) > 0);
    CHECK(term_order_compare({1, 1}, {0, 2}, w) > 0);
}

TEST_CASE("polynomial ring laws") {
    PolyContext ctx(32003, {1, 1, 2});
    std::mt19937 rng(3);
    for (int t = 0; t < 1000; ++t) {
        Polynomial f = random_poly(ctx, rng), g = random_poly(ctx, rng),
                   h = random_poly(ctx, rng);
        CHECK(poly_equal(poly_add(ctx, f, g), poly_add(ctx, g, f)));
        CHECK(poly_equal(poly_add(ctx, poly_add(ctx, f, g), h),
                         poly_add(ctx, f, poly_add(ctx, g, h))));
        CHECK(poly_equal(poly_mul(ctx, f, g), poly_mul(ctx, g, f)));
        CHECK(poly_equal(poly_mul(ctx, f, poly_add(ctx, g, h)),
                         poly_add(ctx, poly_mul(ctx, f, g), poly_mul(ctx, f, h))));
        CHECK(poly_equal(poly_mul(ctx, poly_mul(ctx, f, g), h),
                         poly_mul(ctx, f, poly_mul(ctx, g, h))));
        CHECK(poly_equal(poly_add(ctx, f, poly_neg(ctx, f)), poly_zero()));
    }
}

TEST_CASE("term normalization") {
    PolyContext ctx(32003, {1, 1});
    std::vector<std::string> v{"x", "y"};
    Polynomial f = pp(ctx, v, "x*y + y*x");  // combines
    CHECK(f.terms.size() == 1);
    CHECK(f.terms[0].coeff == 2);
    Polynomial g = pp(ctx, v, "x - x");
    CHECK(g.is_zero());
    // strictly descending term order
    Polynomial h = pp(ctx, v, "y^2 + x^2 + x*y");
    REQUIRE(h.terms.size() == 3);
    CHECK(term_order_compare(h.terms[0].mon, h.terms[1].mon, ctx.weights) > 0);
    CHECK(term_order_compare(h.terms[1].mon, h.terms[2].mon, ctx.weights) > 0);
}

TEST_CASE("homogeneity detection with weights") {
    PolyContext ctx(32003, {1, 2});
    std::vector<std::string> v{"x", "y"};
    CHECK(poly_degree_if_homogeneous(ctx, pp(ctx, v, "x^2 + y")) == 2);
    CHECK_THROWS_AS(poly_degree_if_homogeneous(ctx, pp(ctx, v, "x + y")), input_error);
    CHECK(!poly_degree_if_homogeneous(ctx, poly_zero()).has_value());
    auto comps = homogeneous_components(ctx, pp(ctx, v, "x^3 + x*y + x"));
    CHECK(comps.size() == 2);  // degrees 1 and 3 (x*y has degree 3)
    CHECK(comps.count(1) == 1);
    CHECK(comps.count(3) == 1);
    CHECK(comps[3].terms.size() == 2);
}

TEST_CASE("free element degree checks") {
    PolyContext ctx(32003, {1, 1});
    std::vector<std::string> v{"x", "y"};
    FreeModule mod{{0, 1}};
    FreeElement ok{{pp(ctx, v, "x^2"), pp(ctx, v, "y")}};
    CHECK(fe_degree_if_homogeneous(ctx, mod, ok) == 2);
    FreeElement bad{{pp(ctx, v, "x"), pp(ctx, v, "y")}};
    CHECK_THROWS_AS(fe_degree_if_homogeneous(ctx, mod, bad), input_error);
    CHECK(!fe_degree_if_homogeneous(ctx, mod, fe_zero(2)).has_value());
}

TEST_CASE("weights must be positive") {
    CHECK_THROWS_AS(PolyContext(32003, {1, 0}), input_error);
    CHECK_THROWS_AS(PolyContext(32003, {-1}), input_error);
    CHECK_NOTHROW(PolyContext(32003, {3, 1, 2}));
}

TEST_CASE("budget enforcement") {
    Budget b = Budget::of(1000.0, 10);
    CHECK_NOTHROW(b.charge(5));
    CHECK_THROWS_AS(b.charge(100), resource_error);
    Budget u = Budget::unlimited();
    CHECK_NOTHROW(u.charge(1 << 30));
}
