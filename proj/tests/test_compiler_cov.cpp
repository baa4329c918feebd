#include <doctest.h>

#include "apery/cov.hpp"
#include "apery/evaluator.hpp"
#include "apery/march.hpp"

using namespace apery;

namespace {

constexpr int kDigits = 30;

Real value_at(const PrefactoredIntegral& pi, const Real& x) {
    Complex v(0);
    for (const auto& t : pi.terms)
        v += t.coeff.to_complex() * march_omega(t.word, x, kDigits).value * prefactor_value(t.prefactor, x);
    CHECK(abs(v.im) < Real(1e-25));
    return v.re;
}

}  // namespace

TEST_CASE("depth one blocks match the arcsine closed forms") {
    Precision p(kDigits + 10);
    Real x("0.5");
    Real as = asin(x), root = sqrt(Real(1) - x * x);
    // sum b_n x^2n / (2n)^2 = asin^2 / 2
    CHECK(abs(value_at(compile(parse_spec_or_throw("e:2 > 0")), x) - as * as / 2) < Real(1e-25));
    CHECK(abs(value_at(compile(parse_spec_or_throw("e:1 > 0")), x) - x * as / root) < Real(1e-25));
    CHECK(abs(value_at(compile(parse_spec_or_throw("o+:1 >= 0")), x) - as / (x * root)) < Real(1e-25));
}

TEST_CASE("block words") {
    auto e2 = compile(parse_spec_or_throw("e:2 > 0"));
    REQUIRE(e2.terms.size() == 1);
    CHECK(e2.terms[0].prefactor == Prefactor::f1);
    CHECK(e2.terms[0].word == OmegaWord{Omega::w1, Omega::w1});

    auto o2 = compile(parse_spec_or_throw("o+:2 >= 0"));
    REQUIRE(o2.terms.size() == 1);
    CHECK(o2.terms[0].prefactor == Prefactor::f3);
    CHECK(o2.terms[0].word == OmegaWord{Omega::w3, Omega::w1});

    auto mixed = compile(parse_spec_or_throw("e:2 > o+:1 >= 0"));
    REQUIRE(mixed.terms.size() == 1);
    CHECK(mixed.terms[0].word == OmegaWord{Omega::w1, Omega::w20, Omega::w1});

    // the o- head raises the length by one on one branch
    auto chi = compile(parse_spec_or_throw("o-:2 > 0"));
    REQUIRE(chi.terms.size() == 2);
    CHECK(chi.terms[0].word.size() + chi.terms[1].word.size() == 5);
}

TEST_CASE("compile refuses what the block rules do not cover") {
    CHECK_THROWS_AS(compile(parse_spec_or_throw("o+:2 > 0")), CompileError);
    CHECK_THROWS_AS(compile(parse_spec_or_throw("e:2 > o-:1 > 0")), CompileError);
    CHECK_NOTHROW(compile(parse_spec_or_throw("e:2 > o-:1 > 0"), true));
    CHECK_THROWS_AS(compile(parse_spec_or_throw("o+:2 >= 0", 2)), CompileError);
    CHECK_THROWS_AS(compile_squared(parse_spec_or_throw("o+:2 >= 0", 2)), CompileError);
}

TEST_CASE("compiled canonical specs match the oracle below one") {
    Precision p(kDigits + 10);
    const mpq_class x2(1, 4);
    for (const char* text : {"e:2 > 0", "o+:2 >= 0", "o+:3 >= 0", "e:2 > o+:1 >= 0", "o-:2 > 0", "o-:2 > o+:1 >= 0",
                             "o+:2 >= e:1 > 0", "e:1 > o+:2 >= e:1 > 0", "o-:1 > e:2 > 0", "o+:1 >= o+:1 >= e:1 > 0"}) {
        CAPTURE(text);
        SeriesSpec s = parse_spec_or_throw(text, 1, x2);
        HPComplex v = evaluate_prefactored(compile(s), x2, kDigits);
        CHECK(abs(v.value.re - oracle_eval(s, kDigits - 5).value) < Real(1e-22));
        CHECK(abs(v.value.im) < Real(1e-22));
    }
}

TEST_CASE("odd power sums as iterated integrals") {
    Precision p(kDigits + 10);
    const mpq_class x2(1, 4);
    Real x = sqrt(Real(x2));
    for (const std::vector<int>& s : std::vector<std::vector<int>>{{2}, {3}, {2, 1}, {1, 2}, {2, 1, 3}}) {
        OmegaWord w = odd_power_word(s);
        int weight = 0;
        for (int k : s) weight += k;
        CHECK(static_cast<int>(w.size()) == weight);
        CHECK(w.back() == Omega::w8);
        Real lhs = march_omega(w, x, kDigits).value.re;
        CHECK(abs(lhs - odd_power_sum(s, x2, kDigits).value) < Real(1e-24));
    }
    // at x = 1 the word w0 w8 gives sum 1/(2n+1)^2 = pi^2/8
    Real pi = Real::pi();
    CHECK(abs(march_omega(odd_power_word({2}), Real(1), kDigits).value.re - pi * pi / 8) < Real(1e-25));
}

TEST_CASE("change of variables") {
    Precision p(kDigits + 10);
    CHECK(cov_lambda(Real(1)) == Real(0));
    CHECK(abs(cov_lambda(Real(0)) - Real(1)) < Real(1e-35));
    CHECK(abs(cov_lambda(Real("0.6")) - Real("0.5")) < Real(1e-35));

    // w0 = dt/t pulls back to the letters of 1/t(u)
    XComposite w0 = omega_image(Omega::w0);
    CHECK(w0 == XComposite::monomial(XSym::xp1, GaussianRational(-1)) +
                    XComposite::monomial(XSym::xm1, GaussianRational(-1)) +
                    XComposite::monomial(XSym::xpi) + XComposite::monomial(XSym::xmi));

    // each term: prefactor * (-1)^m int_lambda^1 phi(reverse w)
    for (const char* text : {"e:2 > o+:1 >= 0", "o-:2 > 0", "o+:2 >= e:1 > 0"}) {
        CAPTURE(text);
        PrefactoredIntegral pi = compile(parse_spec_or_throw(text));
        auto xs = to_x_alphabet(pi);
        REQUIRE(xs.size() == pi.terms.size());
        Real x("0.7");
        for (size_t k = 0; k < xs.size(); ++k) {
            CHECK(xs[k].word.size() == pi.terms[k].word.size());
            Complex lhs = pi.terms[k].coeff.to_complex() * march_omega(pi.terms[k].word, x, kDigits).value;
            Complex rhs = xs[k].coeff.to_complex() * march_x(xs[k].word, cov_lambda(x), kDigits).value;
            CHECK(abs(lhs - rhs) < Real(1e-25));
        }
    }
}

TEST_CASE("squared head rules") {
    Precision p(kDigits + 10);
    SeriesSpec s = parse_spec_or_throw("o+:4 >= e:1 > 0", 2);
    PrefactoredIntegral pi = compile_squared(s);
    CHECK(pi.squared);
    for (const auto& t : pi.terms) CHECK(static_cast<int>(t.word.size()) == s.weight());
    Real v = evaluate_prefactored(pi, 1, kDigits).value.re;
    CHECK(abs(v - oracle_eval(s, 15).value) < Real(1e-12));
}
