#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "jetvpa/diffalg.hpp"
#include "jetvpa/groebner.hpp"
#include "jetvpa/poly_io.hpp"
#include "test_support.hpp"

using namespace jetvpa;

namespace {

const VarId X = base_var(1);
const VarId Y = base_var(2);

std::vector<Polynomial> polys(std::initializer_list<const char*> texts) {
    std::vector<Polynomial> out;
    for (const char* t : texts) out.push_back(parse_polynomial(t));
    return out;
}

std::string basis_string(const GroebnerBasis& gb) {
    std::ostringstream out;
    for (const Polynomial& p : gb.basis) out << p.str() << "; ";
    return out.str();
}

}  // namespace

TEST_CASE("reduced bases of small ideals") {
    MonomialOrder lex = MonomialOrder::lex();
    SUBCASE("already a basis") {
        GroebnerBasis gb = buchberger(polys({"x1_1^2", "x1_1*x2_1"}), lex);
        REQUIRE(gb.basis.size() == 2);
        CHECK(gb.basis[0] == parse_polynomial("x1_1*x2_1"));
        CHECK(gb.basis[1] == parse_polynomial("x1_1^2"));
    }
    SUBCASE("coordinate ideal") {
        GroebnerBasis gb = buchberger(polys({"x1_1", "x2_1"}), lex);
        REQUIRE(gb.basis.size() == 2);
        CHECK(gb.basis[0] == parse_polynomial("x2_1"));
        CHECK(gb.basis[1] == parse_polynomial("x1_1"));
    }
    SUBCASE("unit ideal") {
        GroebnerBasis gb = buchberger(polys({"x1_1 - 1", "x1_1"}), lex);
        REQUIRE(gb.basis.size() == 1);
        CHECK(gb.basis[0] == Polynomial(1L));
        CHECK(gb.is_unit_ideal());
    }
    SUBCASE("a classic S-pair cascade") {
        // <x^2 - y, x y - 1> under lex: eliminates to y^2 - ... deterministic content
        GroebnerBasis gb = buchberger(polys({"x1_1^2 - x2_1", "x1_1*x2_1 - 1"}), lex);
        // y^3 = 1 lives in the elimination part
        CHECK(normal_form(parse_polynomial("x2_1^3 - 1"), gb).is_zero());
        CHECK(!gb.is_unit_ideal());
    }
}

TEST_CASE("cyclic-3 benchmark") {
    // <x+y+z, xy+yz+zx, xyz-1>: six points, quotient dimension 6
    MonomialOrder order = MonomialOrder::degrevlex();
    GroebnerBasis gb = buchberger(
        polys({"x1_1 + x2_1 + x3_1", "x1_1*x2_1 + x2_1*x3_1 + x3_1*x1_1",
               "x1_1*x2_1*x3_1 - 1"}),
        order);
    REQUIRE(gb.basis.size() == 3);
    CHECK(gb.basis[0] == parse_polynomial("x1_1 + x2_1 + x3_1"));
    CHECK(gb.basis[1] == parse_polynomial("x2_1^2 + x2_1*x3_1 + x3_1^2"));
    CHECK(gb.basis[2] == parse_polynomial("x3_1^3 - 1"));
    DimensionReport d = krull_dimension(gb);
    CHECK(d.zero_dimensional);
    CHECK(d.quotient_dimension == 6);
}

TEST_CASE("a symmetric cubic system under lex") {
    GroebnerBasis gb = buchberger(
        polys({"x1_1*x2_1^2 + x3_1", "x2_1*x3_1 + x1_1", "x1_1*x3_1 + x2_1"}),
        MonomialOrder::lex());
    REQUIRE(gb.basis.size() == 4);
    CHECK(gb.basis[0] == parse_polynomial("x3_1^3 - x3_1"));
    CHECK(gb.basis[1] == parse_polynomial("x2_1*x3_1^2 - x2_1"));
    CHECK(gb.basis[2] == parse_polynomial("x2_1^3 - x3_1^2"));
    CHECK(gb.basis[3] == parse_polynomial("x2_1*x3_1 + x1_1"));
}

TEST_CASE("a reducible variety takes the max component dimension") {
    // V(xy, xz) = {x = 0} union {y = z = 0}: dimension 2
    MonomialOrder order = MonomialOrder::weighted_degrevlex();
    GroebnerBasis gb =
        buchberger(polys({"x1_1*x2_1", "x1_1*x3_1"}), order, {X, Y, base_var(3)});
    CHECK(krull_dimension(gb).krull_dimension == 2);
}

TEST_CASE("jet dimensions of the cuspidal cubic") {
    // x^2 = y^3 has log canonical threshold 5/6, so the m-jet dimension is
    // m+1 for m <= 4; at order 5 it jumps to 7 (about half a minute, kept
    // out of the suite).
    Presentation cusp{2, {parse_polynomial("x1_1^2 - x2_1^3")}, {}};
    for (int m = 0; m <= 4; ++m) {
        JetIdeal ideal = jet_ideal(cusp, m);
        GroebnerBasis gb = buchberger(ideal.generators,
                                      MonomialOrder::weighted_degrevlex(), ideal.variables);
        CHECK(krull_dimension(gb).krull_dimension == m + 1);
    }
}

TEST_CASE("weight-homogeneous ideals keep weight-homogeneous bases") {
    testsupport::Rand rand(59);
    MonomialOrder order = MonomialOrder::weighted_degrevlex();
    std::vector<VarId> vars{X, Y, jet_var(1, 2), jet_var(2, 2)};
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 2; ++i) {
            Polynomial p = rand.polynomial(vars, 3, 3);
            if (!p.is_zero()) gens.push_back(p.weight_component(p.weight()));
        }
        for (const Polynomial& g : buchberger(gens, order, vars).basis)
            CHECK(g.is_weight_homogeneous());
    }
}

TEST_CASE("normal forms") {
    MonomialOrder order = MonomialOrder::weighted_degrevlex();
    GroebnerBasis gx = buchberger(polys({"x1_1"}), order, {X, Y});
    CHECK(normal_form(parse_polynomial("x1_1^2"), gx).is_zero());
    CHECK(normal_form(parse_polynomial("x2_1"), gx) == parse_polynomial("x2_1"));

    GroebnerBasis gx2 = buchberger(polys({"x1_1^2"}), order, {X, Y});
    CHECK(normal_form(parse_polynomial("x1_1^2*x2_1 + x2_1"), gx2) ==
          parse_polynomial("x2_1"));
}

TEST_CASE("ideal containment") {
    MonomialOrder order = MonomialOrder::weighted_degrevlex();
    CHECK(ideal_contains(buchberger(polys({"x1_1"}), order, {X, Y}),
                         polys({"x1_1^2"})));
    CHECK(!ideal_contains(buchberger(polys({"x1_1^2"}), order, {X, Y}),
                          polys({"x1_1"})));
    CHECK(ideal_contains(buchberger(polys({"x1_1 + x2_1", "x2_1"}), order, {X, Y}),
                         polys({"x1_1"})));
}

TEST_CASE("Krull dimension reports") {
    MonomialOrder order = MonomialOrder::weighted_degrevlex();
    SUBCASE("a line in the plane") {
        DimensionReport d = krull_dimension(buchberger(polys({"x1_1^2", "x1_1*x2_1"}), order,
                                                       {X, Y}));
        CHECK(d.krull_dimension == 1);
        CHECK(!d.zero_dimensional);
        REQUIRE(d.independent_set.size() == 1);
        CHECK(d.independent_set[0] == Y);
    }
    SUBCASE("the origin") {
        DimensionReport d = krull_dimension(buchberger(polys({"x1_1", "x2_1"}), order));
        CHECK(d.krull_dimension == 0);
        CHECK(d.zero_dimensional);
        CHECK(d.quotient_dimension == 1);
    }
    SUBCASE("affine space") {
        DimensionReport d = krull_dimension(
            buchberger({}, order, {X, Y, base_var(3)}));
        CHECK(d.krull_dimension == 3);
    }
    SUBCASE("a triple point") {
        DimensionReport d = krull_dimension(buchberger(polys({"x1_1^3"}), order, {X}));
        CHECK(d.krull_dimension == 0);
        CHECK(d.quotient_dimension == 3);
    }
    SUBCASE("unit ideal") {
        DimensionReport d = krull_dimension(buchberger(polys({"1"}), order, {X}));
        CHECK(d.krull_dimension == -1);
        CHECK(d.unit_ideal);
        CHECK(!d.zero_dimensional);
        CHECK(!d.quotient_dimension.has_value());
    }
}

TEST_CASE("quotient bases") {
    MonomialOrder order = MonomialOrder::weighted_degrevlex();
    SUBCASE("staircase below x^2, y") {
        auto basis = quotient_basis(buchberger(polys({"x1_1^2", "x2_1"}), order));
        REQUIRE(basis.size() == 2);
        CHECK(basis[0] == Monomial{});
        CHECK(basis[1] == Monomial::variable(X));
    }
    SUBCASE("point") {
        auto basis = quotient_basis(buchberger(polys({"x1_1", "x2_1"}), order));
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == Monomial{});
    }
    SUBCASE("univariate") {
        auto basis = quotient_basis(buchberger(polys({"x1_1^3"}), order, {X}));
        REQUIRE(basis.size() == 3);
        CHECK(basis[2] == Monomial::variable(X, 2));
    }
    SUBCASE("positive dimension is an error") {
        CHECK_THROWS_AS(quotient_basis(buchberger(polys({"x1_1"}), order, {X, Y})),
                        std::invalid_argument);
    }
}

TEST_CASE("determinism: identical inputs give identical bases") {
    testsupport::Rand rand(41);
    std::vector<VarId> vars{X, Y, base_var(3)};
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Polynomial> gens;
        int count = rand.uniform(1, 4);
        for (int i = 0; i < count; ++i) gens.push_back(rand.polynomial(vars, 3, 3));
        GroebnerBasis a = buchberger(gens, MonomialOrder::weighted_degrevlex(), vars);
        GroebnerBasis b = buchberger(gens, MonomialOrder::weighted_degrevlex(), vars);
        CHECK(basis_string(a) == basis_string(b));
    }
}

TEST_CASE("adding a generator never increases the dimension") {
    testsupport::Rand rand(43);
    std::vector<VarId> vars{X, Y, base_var(3)};
    MonomialOrder order = MonomialOrder::weighted_degrevlex();
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<Polynomial> gens;
        int count = rand.uniform(1, 3);
        for (int i = 0; i < count; ++i) gens.push_back(rand.polynomial(vars, 2, 2));
        long before = krull_dimension(buchberger(gens, order, vars)).krull_dimension;
        gens.push_back(rand.polynomial(vars, 2, 2));
        long after = krull_dimension(buchberger(gens, order, vars)).krull_dimension;
        CHECK(after <= before);
    }
}

TEST_CASE("pure-power criterion matches the dimension search") {
    testsupport::Rand rand(47);
    std::vector<VarId> vars{X, Y};
    MonomialOrder order = MonomialOrder::weighted_degrevlex();
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Polynomial> gens;
        int count = rand.uniform(1, 4);
        for (int i = 0; i < count; ++i) gens.push_back(rand.polynomial(vars, 3, 3));
        GroebnerBasis gb = buchberger(gens, order, vars);
        if (gb.is_unit_ideal()) continue;
        bool pure_powers = true;
        for (VarId v : vars) {
            bool found = false;
            for (const Polynomial& g : gb.basis) {
                Monomial lm = g.leading_monomial(order);
                if (lm.factors().size() == 1 && lm.factors()[0].first == v) found = true;
            }
            if (!found) pure_powers = false;
        }
        CHECK(pure_powers == krull_dimension(gb).zero_dimensional);
    }
}

TEST_CASE("membership agrees with the linear-algebra oracle") {
    testsupport::Rand rand(53);
    std::vector<VarId> vars{X, Y, base_var(3)};
    MonomialOrder order = MonomialOrder::weighted_degrevlex();
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Polynomial> gens;
        int count = rand.uniform(1, 3);
        for (int i = 0; i < count; ++i) gens.push_back(rand.polynomial(vars, 3, 2));
        GroebnerBasis gb = buchberger(gens, order, vars);

        // members by construction reduce to zero
        Polynomial combo;
        for (const Polynomial& g : gens) combo += rand.polynomial(vars, 2, 2) * g;
        CHECK(normal_form(combo, gb).is_zero());

        // window membership implies zero normal form; nonzero normal form
        // implies the window never certifies membership
        for (int probe = 0; probe < 4; ++probe) {
            Polynomial p = rand.polynomial(vars, 3, 3);
            bool window = testsupport::member_by_window(p, gens, vars, p.degree() + 4);
            if (window) CHECK(normal_form(p, gb).is_zero());
            if (!normal_form(p, gb).is_zero()) CHECK(!window);
        }
    }
}
