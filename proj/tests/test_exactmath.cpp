#include <doctest.h>

#include "distgeom/expr.hpp"
#include "distgeom/multipoly.hpp"
#include "distgeom/ratfunc.hpp"
#include "test_util.hpp"

using namespace distgeom;

namespace {
SymbolTablePtr ellipse_table() {
    return SymbolTable::make("s", "t", {"c", "p", "q", "r", "x1", "y1", "z1", "x2", "y2", "z2"});
}
}  // namespace

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-4/7") == rational_from_long(-4, 7));
    CHECK(parse_rational("0.25") == rational_from_long(1, 4));
    CHECK(parse_rational("-1.5e-3") == rational_from_long(-3, 2000));
    CHECK(parse_rational("1e2") == Rational(100));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("poly arithmetic basics") {
    auto tab = ellipse_table();
    auto P = [&](const char* e) { return parse_polynomial(e, tab); };

    CHECK(P("(s+t)*(s-t)") == P("s^2 - t^2"));
    CHECK(P("p + 0") == P("p"));
    CHECK(P("(x1+y1)^2") == P("x1^2 + 2*x1*y1 + y1^2"));
    CHECK(P("s-s").is_zero());

    // mismatch across tables
    auto other = SymbolTable::make("s", "t", {"w"});
    CHECK_THROWS(P("s") + parse_polynomial("s", other));
}

TEST_CASE("partial derivatives") {
    auto tab = ellipse_table();
    auto s = tab->index_of("s");
    auto t = tab->index_of("t");
    auto F = [&](const char* e) { return parse_expression(e, tab); };

    CHECK(F("s^2*t + t^3").derivative(s) == F("2*s*t"));
    CHECK(F("1/(s-t)").derivative(s) == F("-1/(s-t)^2"));
    CHECK(F("(s-t)^2 + 1").derivative(t) == F("-2*(s-t)"));
}

TEST_CASE("canonical form") {
    auto tab = ellipse_table();
    auto F = [&](const char* e) { return parse_expression(e, tab); };

    RationalFunction a = F("(2*s^2 - 2*t^2) / (4*s - 4*t)");
    CHECK(a.num() == parse_polynomial("s+t", tab));
    CHECK(a.den() == parse_polynomial("2", tab));

    RationalFunction z = F("0 / (s+1)");
    CHECK(z.is_zero());
    CHECK(z.den() == parse_polynomial("1", tab));

    RationalFunction sg = F("(-s)/(-t)");
    CHECK(sg.num() == parse_polynomial("s", tab));
    CHECK(sg.den() == parse_polynomial("t", tab));
}

TEST_CASE("canonicalize idempotent on random inputs") {
    auto tab = SymbolTable::make("s", "t", {"a", "b"});
    testutil::Rng rng(12345);
    for (int i = 0; i < 50; ++i) {
        RationalFunction f = testutil::random_ratfunc(rng, tab, 3, 4);
        RationalFunction g(f.num(), f.den());  // re-run canonicalization
        CHECK(f == g);
    }
}

TEST_CASE("coefficient extraction") {
    auto tab = ellipse_table();
    auto P = [&](const char* e) { return parse_polynomial(e, tab); };

    CHECK(P("3*c*s*t + 5*s^2").coeff_st(1, 1) == P("3*c"));
    CHECK(P("s^2 - t^2").coeff_st(1, 1).is_zero());
    CHECK(P("s^2 - t^2").coeff_st(2, 0) == P("1"));
}

TEST_CASE("reduce mod quadratic relation") {
    auto tab = ellipse_table();
    auto P = [&](const char* e) { return parse_polynomial(e, tab); };
    auto F = [&](const char* e) { return parse_expression(e, tab); };
    auto z1 = tab->index_of("z1");

    auto [e1, o1] = reduce_mod_quadratic(P("z1^3"), z1, F("r"));
    CHECK(e1.is_zero());
    CHECK(o1 == F("r"));

    auto [e2, o2] = reduce_mod_quadratic(P("z1^2 + 1"), z1, F("x2^2 + y2^2"));
    CHECK(e2 == F("x2^2 + y2^2 + 1"));
    CHECK(o2.is_zero());

    CHECK_THROWS(reduce_mod_quadratic(P("z1^2"), z1, F("z1 + 1")));
}

TEST_CASE("exact division") {
    auto tab = SymbolTable::make("x", "y", {});
    auto P = [&](const char* e) { return parse_polynomial(e, tab); };

    auto q = exact_divide(P("x^2 - y^2"), P("x - y"));
    REQUIRE(q.has_value());
    CHECK(*q == P("x + y"));
    CHECK(!exact_divide(P("x^2 + 1"), P("x - 1")).has_value());
}

TEST_CASE("exact division round trip on random polys") {
    auto tab = SymbolTable::make("x", "y", {"a"});
    testutil::Rng rng(777);
    for (int i = 0; i < 60; ++i) {
        MultiPoly a = testutil::random_poly(rng, tab, 5, 4);
        MultiPoly b = testutil::random_poly(rng, tab, 5, 3, /*nonzero=*/true);
        auto q = exact_divide(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
}

TEST_CASE("equal up to scalar") {
    auto tab = SymbolTable::make("s", "t", {});
    auto P = [&](const char* e) { return parse_polynomial(e, tab); };

    auto l1 = equal_up_to_scalar(P("2*s + 2*t"), P("s + t"));
    REQUIRE(l1.has_value());
    CHECK(*l1 == Rational(2));
    CHECK(!equal_up_to_scalar(P("s + t"), P("s - t")).has_value());
    CHECK(equal_up_to_scalar(P("0"), P("0")).value() == Rational(1));
}

TEST_CASE("commutativity witness") {
    auto tab = SymbolTable::make("s", "t", {"a", "b"});
    testutil::Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        MultiPoly a = testutil::random_poly(rng, tab, 4, 4);
        MultiPoly b = testutil::random_poly(rng, tab, 4, 4);
        if (a.is_zero() || b.is_zero()) continue;
        auto l = equal_up_to_scalar(a * b, b * a);
        REQUIRE(l.has_value());
        CHECK(*l == Rational(1));
    }
}

TEST_CASE("mixed partials commute on random rational functions") {
    auto tab = SymbolTable::make("s", "t", {"a"});
    auto s = tab->index_of("s");
    auto t = tab->index_of("t");
    testutil::Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        RationalFunction f = testutil::random_ratfunc(rng, tab, 4, 3);
        CHECK(f.derivative(s).derivative(t) == f.derivative(t).derivative(s));
    }
}

TEST_CASE("evaluation commutes with arithmetic and derivative") {
    auto tab = SymbolTable::make("s", "t", {"a", "b"});
    testutil::Rng rng(4242);
    auto s = tab->index_of("s");
    for (int i = 0; i < 40; ++i) {
        MultiPoly f = testutil::random_poly(rng, tab, 4, 5);
        MultiPoly g = testutil::random_poly(rng, tab, 4, 5);
        std::vector<Rational> at;
        for (std::size_t v = 0; v < tab->size(); ++v) at.push_back(rng.rational());
        CHECK((f * g).eval(at) == f.eval(at) * g.eval(at));
        CHECK((f + g).eval(at) == f.eval(at) + g.eval(at));

        RationalFunction rf(f, g.is_zero() ? MultiPoly::constant(tab, Rational(1)) : g);
        auto dv = rf.derivative(s).eval(at);
        // derivative evaluation at a regular point matches the quotient rule
        auto fn = rf.num().eval(at), fd = rf.den().eval(at);
        if (dv && !is_zero(fd)) {
            auto num_d = rf.num().derivative(s).eval(at);
            auto den_d = rf.den().derivative(s).eval(at);
            CHECK(*dv == (num_d * fd - fn * den_d) / (fd * fd));
        }
    }
}

TEST_CASE("gcd sanity") {
    auto tab = SymbolTable::make("x", "y", {"a"});
    auto P = [&](const char* e) { return parse_polynomial(e, tab); };

    CHECK(poly_gcd(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2")) == P("x + y"));
    CHECK(poly_gcd(P("x*y"), P("x + y")) == P("1"));
    CHECK(poly_gcd(P("0"), P("-3*x")) == P("x"));

    testutil::Rng rng(2024);
    for (int i = 0; i < 25; ++i) {
        MultiPoly g = testutil::random_poly(rng, tab, 3, 3, true);
        MultiPoly a = testutil::random_poly(rng, tab, 3, 3, true);
        MultiPoly b = testutil::random_poly(rng, tab, 3, 3, true);
        MultiPoly d = poly_gcd(a * g, b * g);
        // gcd must contain g (up to the cofactors' own common factor)
        CHECK(exact_divide(d, poly_gcd(g, d)).has_value());
        CHECK(exact_divide(a * g, d).has_value());
        CHECK(exact_divide(b * g, d).has_value());
    }
}

TEST_CASE("stable text form round trips through the parser") {
    auto tab = ellipse_table();
    testutil::Rng rng(5150);
    for (int i = 0; i < 30; ++i) {
        MultiPoly p = testutil::random_poly(rng, tab, 4, 6);
        CHECK(parse_polynomial(p.to_string(), tab) == p);
    }
}
