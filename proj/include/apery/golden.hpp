#pragma once

// Worked series values with references, shared by the self test and the acceptance suite.

#include <functional>
#include <string>
#include <vector>

#include "apery/series.hpp"

namespace apery {

enum class GoldenEngine { Pipeline, Oracle, Both };

struct GoldenCase {
    std::string id;
    std::string group;  // anchors, catalan, chi, mixed, example-s, squared, algebraic
    std::string dsl;
    int binom_power = 1;
    std::string x2 = "1";
    std::string decimal;                // printed value, may be empty
    std::function<Real()> closed_form;  // exact reference, may be empty
    double tol = 1e-8;
    GoldenEngine engine = GoldenEngine::Pipeline;

    SeriesSpec spec() const;
    /// Closed form if present, otherwise the decimal.
    Real reference() const;
};

const std::vector<GoldenCase>& golden_cases();

struct GoldenOutcome {
    const GoldenCase* gcase = nullptr;
    Real value;
    Real oracle;  // zero unless the oracle ran
    Real deviation;
    bool pass = false;
    double seconds = 0;
    std::string error;
};

/// Evaluates one case with the engines it names and compares against its reference.
GoldenOutcome run_golden(const GoldenCase& c, int digits = 40);

}  // namespace apery
