#include "apery/golden.hpp"

#include <chrono>

#include "apery/catalog.hpp"
#include "apery/evaluator.hpp"

namespace apery {

namespace {

Real c(const char* name) { return constant(name, 50).value; }

}  // namespace

SeriesSpec GoldenCase::spec() const { return parse_spec_or_throw(dsl, binom_power, parse_rational(x2)); }

Real GoldenCase::reference() const { return closed_form ? closed_form() : Real(decimal); }

const std::vector<GoldenCase>& golden_cases() {
    using E = GoldenEngine;
    static const std::vector<GoldenCase> cases = [] {
        std::vector<GoldenCase> v;
        auto add = [&v](GoldenCase g) { v.push_back(std::move(g)); };
        add({"zeta2-over-3", "anchors", "n:2 > 0", 1, "1/4", "", [] { return c("zeta2") / 3; }, 1e-12, E::Both});
        add({"alternating-zeta3", "anchors", "n:3 > 0", 1, "-1/4", "",
             [] { return -c("zeta3") * 2 / 5; }, 1e-12, E::Oracle});
        add({"catalan", "catalan", "o+:2 >= 0", 1, "1", "1.83193119", [] { return c("G") * 2; }, 1e-10, E::Both});
        add({"odd-cube", "catalan", "o+:3 >= 0", 1, "1", "1.122690025",
             [] {
                 Real pi = c("pi"), l2 = c("log2");
                 return -pow(pi, 3) / 32 - pi * l2 * l2 / 8 + c("ImLi3((1+i)/2)") * 4;
             },
             1e-8, E::Pipeline});
        add({"seven-zeta3", "catalan", "n:2 > o+:1 >= 0", 1, "1", "", [] { return c("zeta3") * 7; }, 1e-10,
             E::Pipeline});
        add({"chi-square", "chi", "o-:2 > 0", 1, "1", "2.954621213",
             [] {
                 Real pi = c("pi"), l2 = c("log2");
                 return c("G") * 2 - pow(pi, 3) / 32 + c("ImLi3((1+i)/2)") * 4 - pi * l2 * l2 / 8;
             },
             1e-8, E::Pipeline});
        add({"chi-cube", "chi", "o-:3 > 0", 1, "1", "2.1543060048",
             [] {
                 Real pi = c("pi"), l2 = c("log2");
                 return -c("beta4") * 4 + c("ImLi4((1+i)/2)") * 8 + c("ImLi3((1+i)/2)") * 4 +
                        (pi * pow(l2, 3) * 4 + pow(pi, 3) * l2 * 3 - pi * l2 * l2 * 12 - pow(pi, 3) * 3) / 96;
             },
             1e-8, E::Pipeline});
        add({"chi-head-tau", "mixed", "o-:2 > o+:1 >= 0", 1, "1", "3.937040753",
             [] {
                 Real pi = c("pi"), l2 = c("log2");
                 return c("beta4") * 14 - c("ImLi4((1+i)/2)") * 16 - pi * pow(l2, 3) / 12 - pow(pi, 3) * l2 * 3 / 16 +
                        pi * l2 * l2 / 8 + pow(pi, 3) * 5 / 32 - c("ImLi3((1+i)/2)") * 4;
             },
             1e-8, E::Pipeline});
        add({"tau-head-chi", "mixed", "o+:2 >= o-:1 > 0", 1, "1", "1.630404535576",
             [] {
                 Real pi = c("pi"), l2 = c("log2");
                 return pow(pi, 3) * 3 / 16 - c("ImLi3((1+i)/2)") * 8 + pi * l2 * l2 / 4;
             },
             1e-8, E::Pipeline});
        add({"sigma-tau-chi", "mixed", "e:2 > o+:1 >= o-:2 > 0", 1, "1", "0.98658158829",
             [] {
                 Real pi = c("pi"), l2 = c("log2"), g = c("G");
                 Real v = g / 4 * (pow(pi, 3) / 4 - c("ImLi3((1+i)/2)") * 32 + pi * l2 * l2) -
                          (c("Li5(1/2)") + l2 * c("Li4(1/2)")) * 15 / 2 - pow(l2, 5) / 4 + pi * c("beta4") * 6 +
                          c("ReLi3,1,1(1,1,i)") * 24 +
                          (pi * pi * pow(l2, 3) * 80 - pow(pi, 4) * l2 * 15 - pi * pi * c("zeta3") * 87 -
                           c("zeta5") * 2250) / 384;
                 return -v;
             },
             1e-8, E::Pipeline});
        add({"sigma-chi", "mixed", "e:2 > o-:1 > 0", 1, "1", "1.5053689423",
             [] { return c("pi^2") / 8 - c("G") * 2 + c("zeta3") * 7 / 4; }, 1e-8, E::Pipeline});
        add({"example-s", "example-s", "n:2 >= o+:1 >= o-:1 > 0", 1, "1", "7.79861732643",
             [] { return c("zeta3") * 7 + c("G^2") * 8 - c("G") * 8; }, 1e-8, E::Pipeline});
        add({"squared-w5", "squared", "o+:4 >= e:1 > 0", 2, "1", "0.04433915814", [] { return c("W5"); }, 1e-8,
             E::Pipeline});
        add({"squared-sigma-chi", "squared", "e:3 > o-:1 > 0", 2, "1", "0.40829155182",
             [] {
                 Real pi = c("pi"), l2 = c("log2"), g = c("G");
                 return g * g * 2 - g * pi * l2 + pi * (pow(pi, 3) * 3 - c("ImLi3((1+i)/2)") * 128 + pi * l2 * l2 * 4) / 64 +
                        g * pi * 2 - c("zeta3") * 21 / 4;
             },
             1e-8, E::Pipeline});
        add({"squared-chi-sigma", "squared", "o-:3 > e:1 > 0", 2, "1", "0.38530528471",
             [] { return c("W6") + c("W5") * 2 + c("W4"); }, 1e-8, E::Pipeline});
        add({"algebraic-quarter", "algebraic", "o+:1 >= e:2 > 0", 1, "1/4", "",
             [] { return pow(c("pi"), 3) / (sqrt(Real(3)) * 324); }, 1e-10, E::Both});
        add({"algebraic-three-quarters", "algebraic", "o+:1 >= e:2 > 0", 1, "3/4", "",
             [] { return pow(c("pi"), 3) * 2 / (sqrt(Real(3)) * 81); }, 1e-10, E::Both});
        add({"algebraic-half", "algebraic", "o+:1 >= e:2 > 0", 1, "1/2", "",
             [] { return pow(c("pi"), 3) / 192; }, 1e-10, E::Both});
        add({"algebraic-catalan", "algebraic", "o+:2 >= 0", 1, "1/4", "1.063459833", nullptr, 1e-8, E::Both});
        return v;
    }();
    return cases;
}

GoldenOutcome run_golden(const GoldenCase& gc, int digits) {
    GoldenOutcome out;
    out.gcase = &gc;
    auto start = std::chrono::steady_clock::now();
    Precision prec(digits + 10);
    try {
        SeriesSpec spec = gc.spec();
        Real ref = gc.reference();
        Real tol(gc.tol);
        Real dev(0);
        if (gc.engine != GoldenEngine::Oracle) {
            out.value = evaluate_series(spec, digits).value.value.re;
            dev = abs(out.value - ref);
        }
        if (gc.engine != GoldenEngine::Pipeline) {
            out.oracle = oracle_eval(spec, 20).value;
            if (gc.engine == GoldenEngine::Oracle) out.value = out.oracle;
            Real d = abs(out.oracle - ref);
            if (d > dev) dev = d;
        }
        out.deviation = dev;
        out.pass = !(dev > tol);
    } catch (const std::exception& e) {
        out.error = e.what();
        out.pass = false;
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace apery
