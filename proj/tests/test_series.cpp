#include <doctest.h>

#include <gmpxx.h>

#include "apery/series.hpp"

using namespace apery;

namespace {

Real tol(int e) { return pow(Real(10), static_cast<long>(-e)); }

}  // namespace

TEST_CASE("parse: well-formed specs") {
    SeriesSpec a = parse_spec_or_throw("o+:2 >= 0");
    CHECK(a.depth() == 1);
    CHECK(a.factors[0] == Factor{Form::OPlus, 2});
    CHECK(a.junctions[0] == Junction::Weak);

    SeriesSpec b = parse_spec_or_throw("e:2 > o+:1 >= 0");
    CHECK(b.depth() == 2);
    CHECK(b.junctions == std::vector<Junction>{Junction::Strict, Junction::Weak});
    CHECK(b.weight() == 3);

    SeriesSpec s = parse_spec_or_throw("n:2>=o+:1>=o-:1>0");
    CHECK(s.depth() == 3);
    CHECK(s.factors[2] == Factor{Form::OMinus, 1});
    CHECK(to_dsl(s) == "n:2 >= o+:1 >= o-:1 > 0");
}

TEST_CASE("parse: errors carry positions") {
    auto r = parse_spec("x:2 > 0");
    REQUIRE_FALSE(r.spec);
    CHECK(r.errors[0].pos == 0);
    CHECK(r.errors[0].message.find("unknown form") != std::string::npos);

    r = parse_spec("e:0 > 0");
    REQUIRE_FALSE(r.spec);
    CHECK(r.errors[0].pos == 2);
    CHECK(r.errors[0].message.find("positive") != std::string::npos);

    r = parse_spec("e:2 > o+:1");
    REQUIRE_FALSE(r.spec);
    CHECK(r.errors[0].message.find("terminator") != std::string::npos);

    r = parse_spec("e:2 > 0 junk");
    CHECK_FALSE(r.spec);
    CHECK_THROWS_AS(parse_spec_or_throw(""), std::invalid_argument);
}

TEST_CASE("validate") {
    CHECK(validate(parse_spec_or_throw("o+:2 >= 0")).empty());
    auto v = validate(parse_spec_or_throw("e:1 > 0"));
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("s1>=2") != std::string::npos);
    CHECK_FALSE(validate(parse_spec_or_throw("o-:2 >= 0")).empty());
    CHECK_FALSE(validate(parse_spec_or_throw("o-:2 >= o+:1 >= 0")).empty());
    CHECK(validate(parse_spec_or_throw("o-:2 > o+:1 >= 0")).empty());
    CHECK(validate(parse_spec_or_throw("e:1 > 0", 1, mpq_class(1, 4))).empty());
    CHECK_FALSE(validate(parse_spec_or_throw("e:2 > 0", 2)).empty());
    CHECK(validate(parse_spec_or_throw("e:3 > 0", 2)).empty());
}

TEST_CASE("json round trip") {
    for (const char* text : {"o+:2 >= 0", "n:2 >= o+:1 >= o-:1 > 0", "e:3 > o-:1 > 0"}) {
        SeriesSpec s = parse_spec_or_throw(text, 2, mpq_class(3, 4));
        CHECK(spec_from_json(spec_to_json(s)) == s);
        CHECK(spec_from_json(nlohmann::json::parse(spec_to_json(s).dump())) == s);
    }
}

TEST_CASE("binomial weight recurrence") {
    mpz_class fact(1);  // n!
    mpz_class fact2(1);  // (2n)!
    for (int n = 0; n <= 200; ++n) {
        if (n > 0) {
            fact *= n;
            fact2 *= (2 * n - 1) * (2 * n);
        }
        mpz_class four;
        mpz_ui_pow_ui(four.get_mpz_t(), 4, n);
        CHECK(mpq_class(four * fact * fact) == binomial_weight(n) * mpq_class(fact2));
    }
}

TEST_CASE("beta integral identity for b_n / (2n+1)") {
    // int_0^1 t^{2n+1}/sqrt(1-t^2) dt becomes int_0^{pi/2} sin^{2n+1} after t = sin th; Romberg on that
    Precision p(30);
    for (int n = 0; n <= 10; ++n) {
        auto f = [n](const Real& th) { return pow(sin(th), static_cast<long>(2 * n + 1)); };
        const int levels = 12;
        Real a(0), b = Real::pi() / 2;
        std::vector<std::vector<Real>> r(levels, std::vector<Real>(levels));
        r[0][0] = (f(a) + f(b)) * (b - a) / 2;
        for (int i = 1; i < levels; ++i) {
            long m = 1L << (i - 1);
            Real h = (b - a) / (2 * m);
            Real mid(0);
            for (long k = 0; k < m; ++k) mid += f(a + h * (2 * k + 1));
            r[i][0] = r[i - 1][0] / 2 + mid * h;
            Real four(1);
            for (int j = 1; j <= i; ++j) {
                four *= 4;
                r[i][j] = r[i][j - 1] + (r[i][j - 1] - r[i - 1][j - 1]) / (four - 1);
            }
        }
        Real acc = r[levels - 1][levels - 1];
        Real expected = Real(binomial_weight(n)) / (2 * n + 1);
        CHECK(abs(acc - expected) < tol(20));
    }
}

TEST_CASE("oracle: central binomial anchors") {
    Precision p(40);
    // sum 1/(n^2 C(2n,n)) = zeta(2)/3 through b_n (1/4)^n / (2n)^2 rescaled by 4
    HPReal a = oracle_eval(parse_spec_or_throw("e:2 > 0", 1, mpq_class(1, 4)), 30);
    CHECK(abs(a.value * 4 - Real::zeta(2) / 3) < tol(25));
    HPReal an = oracle_eval(parse_spec_or_throw("n:2 > 0", 1, mpq_class(1, 4)), 30);
    CHECK(abs(an.value - Real::zeta(2) / 3) < tol(25));
    // at x^2 = -1/4 the sum is sum (-1)^n / (n^3 C(2n,n)) = -(2/5) zeta(3)
    HPReal b = oracle_eval(parse_spec_or_throw("n:3 > 0", 1, mpq_class(-1, 4)), 30);
    CHECK(abs(b.value + Real(2) / 5 * Real::zeta(3)) < tol(25));
}

TEST_CASE("oracle at x^2 = 1") {
    Precision p(40);
    HPReal g = oracle_eval(parse_spec_or_throw("o+:2 >= 0"), 30);
    CHECK(abs(g.value - Real::catalan() * 2) < tol(20));
    HPReal z = oracle_eval(parse_spec_or_throw("e:2 > o+:1 >= 0"), 30);
    CHECK(abs(z.value - Real::zeta(3) * 7 / 4) < tol(20));
    HPReal zn = oracle_eval(parse_spec_or_throw("n:2 > o+:1 >= 0"), 30);
    CHECK(abs(zn.value - Real::zeta(3) * 7) < tol(20));
    CHECK_THROWS_AS(oracle_eval(parse_spec_or_throw("o+:2 >= o+:1 >= o+:1 >= o+:1 >= 0"), 30), OracleUnavailable);
}

TEST_CASE("alias n agrees with e scaled by 2^s term by term") {
    Precision p(40);
    SeriesSpec e = parse_spec_or_throw("e:2 > o+:1 >= e:1 > 0", 1, mpq_class(1, 3));
    SeriesSpec n = alias_even_as_n(e);
    CHECK(to_dsl(n) == "n:2 > o+:1 >= n:1 > 0");
    std::vector<long> cps;
    for (long k = 0; k <= 100; ++k) cps.push_back(k);
    auto se = nested_partial_sums(NestedSum::from_spec(e), cps);
    auto sn = nested_partial_sums(NestedSum::from_spec(n), cps);
    for (size_t i = 0; i < cps.size(); ++i) CHECK(abs(se[i] * 8 - sn[i]) <= abs(sn[i]) * tol(35));
}

TEST_CASE("partial sums are monotone for positive x^2") {
    Precision p(30);
    for (const char* text : {"o+:2 >= 0", "e:2 > o-:1 > 0", "n:2 >= o+:1 >= o-:1 > 0", "o-:3 > e:1 > 0"}) {
        std::vector<long> cps;
        for (long k = 0; k <= 60; ++k) cps.push_back(k);
        auto s = nested_partial_sums(NestedSum::from_spec(parse_spec_or_throw(text, 1, mpq_class(1, 2))), cps);
        for (size_t i = 1; i < s.size(); ++i) CHECK(s[i] >= s[i - 1]);
    }
}

TEST_CASE("t* values") {
    Precision p(40);
    Real pi = Real::pi();
    CHECK(abs(t_star_direct({2}, 30).value - pi * pi / 8) < tol(20));
    CHECK(abs(t_star_direct({3}, 30).value - Real::zeta(3) * 7 / 8) < tol(20));
    for (int d = 1; d <= 3; ++d) {
        HPReal t = t_star_direct(std::vector<int>(d, 2), 30);
        CHECK(abs(t.value - Real(4) / pi * dirichlet_beta(2 * d + 1)) < tol(15));
    }
}

TEST_CASE("closed forms of the ones and twos families") {
    Precision p(40);
    Real pi = Real::pi();
    for (int d = 1; d <= 3; ++d) {
        CHECK(abs(closed_form_tstar(TStarVariant::Ones, d, pi / 4).value - dirichlet_beta(d) * 2) < tol(30));
        CHECK(abs(closed_form_tstar(TStarVariant::Twos, d, pi / 2).value - dirichlet_beta(2 * d) * 2) < tol(30));
        // series side at sin^2 y = 1/4
        std::string ones, twos;
        for (int j = 0; j < d; ++j) {
            ones += "o+:1 >= ";
            twos += "o+:2 >= ";
        }
        HPReal so = oracle_eval(parse_spec_or_throw(ones + "0", 1, mpq_class(1, 4)), 30);
        CHECK(abs(so.value - closed_form_tstar(TStarVariant::Ones, d, pi / 6).value) < tol(25));
        HPReal st = oracle_eval(parse_spec_or_throw(twos + "0", 1, mpq_class(1, 4)), 30);
        CHECK(abs(st.value - closed_form_tstar(TStarVariant::Twos, d, pi / 6).value) < tol(25));
    }
    CHECK(abs(closed_form_tstar(TStarVariant::Ones, 1, Real("1e-20")).value - Real(1)) < tol(15));
    CHECK_THROWS_AS(closed_form_tstar(TStarVariant::Ones, 2, pi / 2), DomainError);
    CHECK_THROWS_AS(closed_form_tstar(TStarVariant::Twos, 2, Real(0)), DomainError);
}

TEST_CASE("odd power sums") {
    Precision p(40);
    // sum x^{2n+1}/(2n+1) = atanh x
    Real x = sqrt(Real(1) / 3);
    HPReal s = odd_power_sum({1}, mpq_class(1, 3), 30);
    CHECK(abs(s.value - (log(Real(1) + x) - log(Real(1) - x)) / 2) < tol(25));
}

TEST_CASE("interleaving chains") {
    auto one = interleave_chains({1}, {}, {Form::N, 2}, 1);
    REQUIRE(one.size() == 1);
    CHECK(to_dsl(one[0]) == "n:2 >= n:1 > 0");

    auto two = interleave_chains({1}, {1}, {Form::N, 2}, 1, mpq_class(1, 4));
    REQUIRE(two.size() == 2);
    CHECK(to_dsl(two[0]) == "n:2 >= n:1 > o+:1 >= 0");
    CHECK(to_dsl(two[1]) == "n:2 > o+:1 >= n:1 > 0");

    auto c = interleave_chains({}, {1}, {Form::OPlus, 2}, 1);
    REQUIRE(c.size() == 1);
    CHECK(to_dsl(c[0]) == "o+:2 > o+:1 >= 0");

    // brute force: sum_n b_n x^{2n} zeta_n(1) t_n(1) / n^2 at x^2 = 1/4
    Precision p(30);
    Real total(0), w(1), zeta_n(0), t_n(0);
    for (long n = 1; n <= 2000; ++n) {
        w *= Real(2 * n) / Real(2 * n - 1) / 4;
        zeta_n += Real(1) / Real(n);
        t_n += Real(1) / Real(2 * n - 1);
        total += w * zeta_n * t_n / (Real(n) * Real(n));
    }
    Real sum(0);
    for (const auto& s : two) sum += oracle_eval(s, 25).value;
    CHECK(abs(sum - total) < tol(20));
}
