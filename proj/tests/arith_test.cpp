#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetvpa/poly_gcd.hpp"
#include "jetvpa/poly_io.hpp"
#include "jetvpa/polynomial.hpp"
#include "test_support.hpp"

using namespace jetvpa;

namespace {
const VarId X = base_var(1);
const VarId Y = base_var(2);

Polynomial var(VarId v) { return Polynomial::variable(v); }
}  // namespace

TEST_CASE("scalars stay canonical") {
    CHECK(to_string(make_scalar(4, 6)) == "2/3");
    CHECK(to_string(make_scalar(-4, 6)) == "-2/3");
    CHECK(to_string(make_scalar(3, -9)) == "-1/3");
    CHECK(to_string(make_scalar(0, 5)) == "0");
    CHECK(factorial(5) == 120);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(binomial(6, 3) == 20);
}

TEST_CASE("polynomial addition") {
    CHECK((var(X) + var(Y)) + (-var(X)) == var(Y));
    Polynomial p = parse_polynomial("3*x1_1^2 - x2_1");
    CHECK(p + Polynomial{} == p);
    CHECK(var(X).pow(2) + var(X).pow(2) == parse_polynomial("2*x1_1^2"));
}

TEST_CASE("polynomial multiplication") {
    CHECK(var(X) * var(Y) == parse_polynomial("x1_1*x2_1"));
    CHECK((var(X) + Polynomial(1L)) * (var(X) - Polynomial(1L)) ==
          parse_polynomial("x1_1^2 - 1"));
}

TEST_CASE("weight is additive on weight-homogeneous products") {
    testsupport::Rand rand(11);
    for (int i = 0; i < 40; ++i) {
        // homogeneous pieces of random elements
        Polynomial a = rand.jet_element(2, 5, 3);
        Polynomial b = rand.jet_element(2, 5, 3);
        if (a.is_zero() || b.is_zero()) continue;
        Polynomial ha = a.weight_component(a.weight());
        Polynomial hb = b.weight_component(b.weight());
        CHECK((ha * hb).weight() == ha.weight() + hb.weight());
        CHECK((ha * hb).is_weight_homogeneous());
    }
}

TEST_CASE("ring axioms on random triples") {
    testsupport::Rand rand(7);
    std::vector<VarId> vars{X, Y, jet_var(1, 2)};
    for (int i = 0; i < 60; ++i) {
        Polynomial a = rand.polynomial(vars, 3, 3);
        Polynomial b = rand.polynomial(vars, 3, 3);
        Polynomial c = rand.polynomial(vars, 3, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == Polynomial{});
    }
}

TEST_CASE("monomial order: spec cases") {
    MonomialOrder lex = MonomialOrder::lex();
    Monomial mx = Monomial::variable(X);
    Monomial my = Monomial::variable(Y);
    CHECK(lex.greater(mx, my));  // x1_1 precedes x2_1 in the canonical listing

    MonomialOrder drl = MonomialOrder::degrevlex();
    Monomial xy = mx * my;
    Monomial xx = Monomial::variable(X, 2);
    CHECK(drl.compare(xy, xx) != std::strong_ordering::equal);
    CHECK((drl.greater(xy, xx) != drl.greater(xx, xy)));
    CHECK(drl.compare(xy, xy) == std::strong_ordering::equal);
}

TEST_CASE("explicit variable rankings override the canonical listing") {
    MonomialOrder reversed = MonomialOrder::lex().with_ranking({Y, X});
    CHECK(reversed.greater(Monomial::variable(Y), Monomial::variable(X)));
    CHECK(MonomialOrder::lex().greater(Monomial::variable(X), Monomial::variable(Y)));
    // unlisted variables follow the listed ones
    VarId z = base_var(3);
    CHECK(reversed.greater(Monomial::variable(X), Monomial::variable(z)));
}

TEST_CASE("degrevlex differs from lex where it should") {
    // with x > y > z: lex puts x z above y^2, degrevlex puts y^2 above x z
    VarId z = base_var(3);
    Monomial xz = Monomial::variable(X) * Monomial::variable(z);
    Monomial yy = Monomial::variable(Y, 2);
    CHECK(MonomialOrder::lex().greater(xz, yy));
    CHECK(MonomialOrder::degrevlex().greater(yy, xz));
}

TEST_CASE("monomial orders satisfy the order axioms") {
    testsupport::Rand rand(19);
    std::vector<VarId> vars{X, Y, jet_var(1, 2), jet_var(2, 3)};
    for (MonomialOrder order : {MonomialOrder::lex(), MonomialOrder::degrevlex(),
                                MonomialOrder::weighted_degrevlex()}) {
        for (int i = 0; i < 80; ++i) {
            Monomial a = rand.monomial(vars, 4);
            Monomial b = rand.monomial(vars, 4);
            Monomial c = rand.monomial(vars, 4);
            // totality + antisymmetry
            auto ab = order.compare(a, b);
            auto ba = order.compare(b, a);
            CHECK(ab == (ba == std::strong_ordering::less ? std::strong_ordering::greater
                         : ba == std::strong_ordering::greater ? std::strong_ordering::less
                                                               : std::strong_ordering::equal));
            if (ab == std::strong_ordering::equal) CHECK(a == b);
            // multiplicativity
            if (order.less(a, b)) CHECK(order.less(a * c, b * c));
            // the unit is the minimum (well-order)
            CHECK(!order.less(a, Monomial{}));
            // transitivity
            if (order.less(a, b) && order.less(b, c)) CHECK(order.less(a, c));
        }
    }
}

TEST_CASE("canonical text form round-trips") {
    testsupport::Rand rand(23);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = rand.jet_element(3, 5, 4);
        std::string s = p.str();
        CHECK(parse_polynomial(s).str() == s);
        CHECK(parse_polynomial(s) == p);
    }
    CHECK(Polynomial{}.str() == "0");
    CHECK(parse_polynomial("0") == Polynomial{});
}

TEST_CASE("parser accepts the grammar") {
    CHECK(parse_polynomial("x1_1^2 - 2*x1_1 + 1") ==
          (var(X) - Polynomial(1L)) * (var(X) - Polynomial(1L)));
    CHECK(parse_polynomial("1/2 * (x1_1 + x2_1)^2").coefficient(Monomial::variable(X) *
                                                                Monomial::variable(Y)) == 1);
    CHECK(parse_polynomial("-x1_1") == -var(X));
    CHECK(parse_polynomial(" - 22/5 ") == Polynomial(make_scalar(-22, 5)));

    std::map<std::string, VarId> names{{"e", X}, {"f", Y}};
    CHECK(parse_polynomial("e*f - f*e", &names) == Polynomial{});
}

TEST_CASE("parser reports positioned diagnostics") {
    try {
        parse_polynomial("x1_1 +\n* 2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_polynomial("q + 1"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(x1_1"), ParseError);
}

TEST_CASE("gcd and exact division") {
    Polynomial x = var(X), y = var(Y);
    CHECK(poly_gcd(x.pow(3), x.pow(2) * Scalar(3)) == x.pow(2));
    CHECK(poly_gcd(x.pow(2) * y, x * y.pow(2)) == x * y);
    CHECK(poly_gcd(x + y, x - y) == Polynomial(1L));
    CHECK(poly_gcd((x + y).pow(2) * x, (x + y) * y) == x + y);
    CHECK(poly_gcd(Polynomial{}, x.pow(2) * Scalar(5)) == x.pow(2));
    CHECK(poly_exact_divide(x.pow(3) * y, x * y) == x.pow(2));
    CHECK_THROWS_AS(poly_exact_divide(x.pow(2) + Polynomial(1L), x), std::invalid_argument);

    testsupport::Rand rand(31);
    std::vector<VarId> vars{X, Y};
    for (int i = 0; i < 25; ++i) {
        Polynomial a = rand.polynomial(vars, 2, 2);
        Polynomial b = rand.polynomial(vars, 2, 2);
        if (a.is_zero() || b.is_zero()) continue;
        Polynomial g = poly_gcd(a * b, a);
        // a divides gcd(ab, a) up to the monic normalization
        CHECK(poly_exact_divide(g, a.monic(MonomialOrder::weighted_degrevlex())).is_constant());
        CHECK(poly_exact_divide(a * b, a) == b);
    }
}
