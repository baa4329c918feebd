#include <doctest.h>

#include <random>

#include "apery/catalog.hpp"
#include "apery/cov.hpp"
#include "apery/evaluator.hpp"
#include "apery/march.hpp"

using namespace apery;

TEST_CASE("every constant is stable under doubled precision") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        CHECK_FALSE(catalog_definition(name).empty());
        Precision p(90);
        Real a = constant(name, 40).value;
        Real b = constant(name, 80).value;
        Real scale = abs(b) > Real(1) ? abs(b) : Real(1);
        CHECK(abs(a - b) < scale * Real(1e-38));
    }
    CHECK_THROWS_AS(constant("zeta4", 40), UnknownConstant);
}

TEST_CASE("classical values") {
    Precision p(50);
    Real pi = Real::pi(), l2 = Real::log2();
    CHECK(abs(constant("zeta2", 40).value - pi * pi / 6) < Real(1e-38));
    CHECK(abs(constant("Li1(1/2)", 40).value - l2) < Real(1e-38));
    // Li2(1/2) = pi^2/12 - log^2 2 / 2
    CHECK(abs(constant("Li2(1/2)", 40).value - (pi * pi / 12 - l2 * l2 / 2)) < Real(1e-38));
    // Li3(1/2) = 7/8 zeta(3) - pi^2 log 2 / 12 + log^3 2 / 6
    CHECK(abs(constant("Li3(1/2)", 40).value - (Real::zeta(3) * 7 / 8 - pi * pi * l2 / 12 + pow(l2, 3) / 6)) <
          Real(1e-38));
    CHECK(abs(constant("beta4", 40).value - dirichlet_beta(4)) < Real(1e-38));
}

TEST_CASE("multi-depth constants match nested sums") {
    Precision p(40);
    CHECK(abs(constant("ImLi4,1(i,1)", 30).value - mpl_sum({{4, 1}, {1, 0}}, 15).value.im) < Real(1e-13));
    CHECK(abs(constant("ReLi4,2(-1,i)", 30).value - mpl_sum({{4, 2}, {2, 1}}, 15).value.re) < Real(1e-13));
    CHECK(abs(constant("ReLi3,1,1(1,1,i)", 30).value - mpl_sum({{3, 1, 1}, {0, 0, 1}}, 15).value.re) <
          Real(1e-13));
}

TEST_CASE("the squared-binomial combination") {
    Precision p(50);
    Real sum = constant("W6", 40).value + constant("W5", 40).value * 2 + constant("W4", 40).value;
    CHECK(abs(sum - Real("0.38530528471")) < Real(1e-10));
    // W4 = -int td tz td td with td = -i times the image of w1
    CompositeWord word{omega_image(Omega::w1), omega_image(Omega::w2), omega_image(Omega::w3),
                       omega_image(Omega::w1)};
    Real w4 = march_x(word, Real(0), 40).value.re;
    CHECK(abs(w4 - constant("W4", 40).value) < Real(1e-35));
}

TEST_CASE("integer relations") {
    Precision p(60);
    Real g = Real::catalan(), z3 = Real::zeta(3);
    auto r = find_relation(z3 * 7 - g * 8, {"zeta3", "G"}, 40);
    REQUIRE(r);
    CHECK(r->verified);  // the value carries 60 digits
    CHECK(r->value_coeff == 1);
    CHECK(r->coeffs[0] == -7);
    CHECK(r->coeffs[1] == 8);
    CHECK(to_string(*r, {"zeta3", "G"}) == "1*value - 7*zeta3 + 8*G = 0");

    auto recomputed = find_relation([](int digits) {
        Precision q(digits + 10);
        return Real::zeta(3) * 7 - Real::catalan() * 8;
    }, {"zeta3", "G"}, 40);
    REQUIRE(recomputed);
    CHECK(recomputed->verified);

    auto pi2 = find_relation(Real::pi() * Real::pi() / 8, {"pi^2"}, 40);
    REQUIRE(pi2);
    CHECK(pi2->value_coeff == 8);
    CHECK(pi2->coeffs[0] == -1);

    std::mt19937_64 rng(11);
    Real noise(std::to_string(rng() % 1000000007) + "." + std::to_string(rng()) + std::to_string(rng()) +
               std::to_string(rng()));
    CHECK_FALSE(find_relation(noise, {"zeta3", "G", "1"}, 40));
    CHECK_THROWS_AS(find_relation(z3, {"zeta3", "G", "1", "pi", "log2"}, 40), PrecisionTooLow);
}
