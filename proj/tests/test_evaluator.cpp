#include <doctest.h>

#include "apery/catalog.hpp"
#include "apery/evaluator.hpp"
#include "apery/golden.hpp"

using namespace apery;

TEST_CASE("golden values") {
    for (const auto& g : golden_cases()) {
        CAPTURE(g.id);
        GoldenOutcome out = run_golden(g, 40);
        CHECK(out.error == "");
        CHECK(out.pass);
    }
}

TEST_CASE("mixed three-level example splits into 8 G^2 and 7 zeta(3) - 8 G") {
    Precision p(50);
    SeriesSpec s = parse_spec_or_throw("n:2 >= o+:1 >= o-:1 > 0");
    EvalReport r = evaluate_series(s, 40);
    CHECK(r.limit_mode);
    Real g = Real::catalan(), z3 = Real::zeta(3);
    CHECK(abs(r.main.value.re - g * g * 8) < Real(1e-30));
    CHECK(abs(r.bundle.value.re - (z3 * 7 - g * 8)) < Real(1e-30));
    CHECK(abs(r.value.value.re - Real("7.79861732643")) < Real(1e-8));

    // the extrapolated bundle is an independent route to the same number
    HPReal ex = extrapolate_bundle(canonicalize(s), 40);
    CHECK(abs(ex.value - (z3 * 7 - g * 8)) < Real(1e-15));
}

TEST_CASE("evaluate_series refusals") {
    CHECK_THROWS(evaluate_series(parse_spec_or_throw("n:2 > 0", 1, mpq_class(-1, 4)), 30));
    CHECK_THROWS(evaluate_series(parse_spec_or_throw("o+:4 >= e:1 > 0", 2, mpq_class(1, 2)), 30));
    CHECK_THROWS(evaluate_series(parse_spec_or_throw("o+:1 >= 0"), 30));
}

TEST_CASE("native mode agrees with canonical mode below one") {
    Precision p(40);
    SeriesSpec s = parse_spec_or_throw("e:2 > o-:1 > 0", 1, mpq_class(1, 4));
    Real a = evaluate_series(s, 30).value.value.re;
    Real b = evaluate_series(s, 30, {.native = true}).value.value.re;
    CHECK(abs(a - b) < Real(1e-25));
    CHECK(abs(a - oracle_eval(s, 25).value) < Real(1e-20));
}

TEST_CASE("nested sums at fourth roots of unity") {
    Precision p(40);
    Real pi = Real::pi(), g = Real::catalan();
    HPComplex li2 = mpl_sum({{2}, {3}}, 20);
    CHECK(abs(li2.value - Complex(-pi * pi / 48, -g)) < Real(1e-15));
    CHECK(abs(li2.value - march_x(li_to_word({{2}, {3}}), Real(0), 30).value) < Real(1e-15));
    // Im Li_2d(i) = beta(2d)
    for (int d = 1; d <= 3; ++d) {
        HPComplex v = mpl_sum({{2 * d}, {1}}, 20);
        CHECK(abs(v.value.im - dirichlet_beta(2 * d)) < Real(1e-15));
    }
    // zeta(2, 1) = zeta(3)
    CHECK(abs(mpl_sum({{2, 1}, {0, 0}}, 20).value - Complex(Real::zeta(3))) < Real(1e-14));
    CHECK_THROWS_AS(mpl_sum({{1}, {0}}, 20), std::invalid_argument);
    CHECK_THROWS_AS(mpl_sum({{1, 2}, {0, 0}}, 20), std::invalid_argument);
}

TEST_CASE("lowering to colored zeta values") {
    Precision p(50);
    CmzvExpr e = lower_to_cmzv(parse_spec_or_throw("o+:2 >= 0"));
    CHECK(e.complete);
    CHECK(e.max_reg_degree == 0);
    for (const auto& t : e.terms) CHECK(t.li.weight() == 2);
    Complex v = evaluate_cmzv(e, 40).value;
    CHECK(abs(v - Complex(Real::catalan() * 2)) < Real(1e-35));

    CmzvExpr z = lower_to_cmzv(parse_spec_or_throw("n:2 > o+:1 >= 0"));
    CHECK(z.complete);
    CHECK(abs(evaluate_cmzv(z, 40).value - Complex(Real::zeta(3) * 7)) < Real(1e-35));

    CmzvExpr s = lower_to_cmzv(parse_spec_or_throw("n:2 >= o+:1 >= o-:1 > 0"));
    CHECK_FALSE(s.complete);
    CHECK_THROWS(lower_to_cmzv(parse_spec_or_throw("o+:2 >= 0", 1, mpq_class(1, 4))));
}
