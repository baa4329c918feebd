#pragma once

// Rewrites a series into a combination of canonical series: every junction
// native to the form before it and O- only at the head.

#include <vector>

#include <json.hpp>

#include "apery/gaussian.hpp"
#include "apery/series.hpp"

namespace apery {

/// 1/((2n+cu)^s (2n+cv)^t) with cu != cv.
struct LinearFormPair {
    int cu;
    int s;
    int cv;
    int t;
};

struct FractionTerm {
    GaussianRational coeff;
    int c;  // the form 2n+c
    int exp;
};

/// Exact partial fractions of a pair of linear forms with constant difference.
std::vector<FractionTerm> partial_fraction(const LinearFormPair& pair);

struct ComboTerm {
    GaussianRational coeff;
    SeriesSpec spec;
};

/// input = sum main + main_constant + sum bundle + bundle_constant.
/// The bundle collects everything descending from a merge into the head index.
struct SpecCombo {
    std::vector<ComboTerm> main;
    std::vector<ComboTerm> bundle;
    GaussianRational main_constant;
    GaussianRational bundle_constant;
    bool contains_divergent_piece = false;

    size_t size() const { return main.size() + bundle.size(); }
};

bool is_canonical(const SeriesSpec& spec);

/// Throws std::invalid_argument if the spec fails validate().
SpecCombo canonicalize(const SeriesSpec& spec);

nlohmann::json combo_to_json(const SpecCombo& combo);

}  // namespace apery
