#include <doctest.h>

#include "apery/march.hpp"

using namespace apery;

namespace {

constexpr int kDigits = 40;

XWord w(const char* text) { return parse_x_word(text); }

}  // namespace

TEST_CASE("depth one integrals on [0, 1]") {
    Precision p(kDigits + 10);
    Real pi = Real::pi(), l2 = Real::log2(), g = Real::catalan();
    // int_0^1 du/(-1-u) = -log 2
    CHECK(abs(march_x(w("x-1"), Real(0), kDigits).value - Complex(-l2)) < Real(1e-38));
    // zeta(2), zeta(3)
    CHECK(abs(march_x(w("a x+1"), Real(0), kDigits).value - Complex(pi * pi / 6)) < Real(1e-38));
    CHECK(abs(march_x(w("a a x+1"), Real(0), kDigits).value - Complex(Real::zeta(3))) < Real(1e-38));
    // Li2(-i) = -pi^2/48 - i G
    HPComplex li2 = march_x(w("a x+i"), Real(0), kDigits);
    CHECK(abs(li2.value - Complex(-pi * pi / 48, -g)) < Real(1e-38));
    CHECK(li2.err < Real(1e-35));
    // Li2(-1) = -pi^2/12
    CHECK(abs(march_x(w("a x-1"), Real(0), kDigits).value - Complex(-pi * pi / 12)) < Real(1e-38));
}

TEST_CASE("lower end inside the interval") {
    Precision p(kDigits + 10);
    Real a("0.3");
    // int_a^1 du/u = -log a
    CHECK(abs(march_x(w("a"), a, kDigits).value - Complex(-log(a))) < Real(1e-38));
    // int_a^1 du/u int_u^1 dv/v = (log a)^2 / 2
    CHECK(abs(march_x(w("a a"), a, kDigits).value - Complex(log(a) * log(a) / 2)) < Real(1e-38));
    // double pole at i: int_a^1 du/(i-u)^2 = 1/(i-1) - 1/(i-a)
    Complex i(Real(0), Real(1));
    Complex expect = Complex(1) / (i - Complex(1)) - Complex(1) / (i - Complex(a));
    CHECK(abs(march_x(w("q+i"), a, kDigits).value - expect) < Real(1e-38));
}

TEST_CASE("expansion at zero agrees with the march") {
    Precision p(kDigits + 10);
    for (const char* text : {"a x+1", "x-1 a x+i", "x+1 x-i", "a q-i x+1"}) {
        CAPTURE(text);
        XWord word = w(text);
        CompositeWord cw;
        for (XSym l : word) cw.push_back(XComposite::monomial(l));
        LogPowerSeries s = march_x_near_zero(cw, kDigits);
        for (const char* u : {"0.05", "0.2"}) {
            Real uu(u);
            CHECK(abs(s.eval(uu) - march_x(word, uu, kDigits).value) < Real(1e-30));
        }
    }
}

TEST_CASE("omega words through the sine substitution") {
    Precision p(kDigits + 10);
    Real pi = Real::pi();
    // int_0^1 w1 = pi/2, int_0^1 w1 w1 = pi^2/8
    CHECK(abs(march_omega({Omega::w1}, Real(1), kDigits).value - Complex(pi / 2)) < Real(1e-38));
    CHECK(abs(march_omega({Omega::w1, Omega::w1}, Real(1), kDigits).value - Complex(pi * pi / 8)) < Real(1e-38));
    // int_0^x dt = x, int_0^x w8 = atanh x
    Real x("0.6");
    CHECK(abs(march_omega({Omega::wdt}, x, kDigits).value - Complex(x)) < Real(1e-38));
    CHECK(abs(march_omega({Omega::w8}, x, kDigits).value - Complex(log((Real(1) + x) / (Real(1) - x)) / 2)) <
          Real(1e-38));
}
