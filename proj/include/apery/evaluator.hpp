#pragma once

// Series values through normalizer, block compiler, change of variables and the
// march engine, plus the independent nested-sum evaluation of Li values.

#include <string>
#include <vector>

#include "apery/compiler.hpp"
#include "apery/cov.hpp"
#include "apery/march.hpp"
#include "apery/normalizer.hpp"
#include "apery/numeric.hpp"

namespace apery {

class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Li_s(z) at 4th roots of unity by nested sums; for |z_1| = 1 the partial sums at
/// multiples of 4 are extrapolated. Refuses Li_1(1) and divergent indices.
HPComplex mpl_sum(const LiIndex& li, int digits);

struct EvalOptions {
    bool native = false;  // skip canonicalization (junctions must already be native)
};

struct EvalReport {
    HPComplex value;
    HPComplex main;    // canonical terms that converge on their own, with their constant
    HPComplex bundle;  // terms descending from head merges, with their constant
    bool limit_mode = false;
    bool native_fallback = false;
    size_t words = 0;
};

/// Value of the series at its x^2 (0 < x^2 <= 1). At x = 1 the bundle is evaluated as
/// the lambda^0 coefficient of its expansion in lambda = sqrt((1-x)/(1+x)).
EvalReport evaluate_series(const SeriesSpec& spec, int digits, const EvalOptions& options = {});

/// prefactor * int_0^x word summed over a compiled integral, at x = sqrt(x2) < 1 or x2 = 1.
HPComplex evaluate_prefactored(const PrefactoredIntegral& pi, const mpq_class& x2, int digits);

/// Bundle of a combo at x = 1 in limit mode.
HPComplex evaluate_bundle_limit(const SpecCombo& combo, int digits);

/// Bundle at x_k = 1 - 2^-k for even k and Richardson extrapolation in sqrt(1 - x); a diagnostic.
HPReal extrapolate_bundle(const SpecCombo& combo, int digits);

struct CmzvTerm {
    GaussianRational coeff;
    LiIndex li;
};

struct CmzvExpr {
    std::vector<CmzvTerm> terms;
    GaussianRational constant;
    bool complete = true;  // false when a bundle is left to the numeric limit
    int max_reg_degree = 0;
};

/// The x = 1 value as a combination of Li values at 4th roots of unity.
CmzvExpr lower_to_cmzv(const SeriesSpec& spec);
/// Compiled words of a combo part expanded in x letters with their x = 1 prefactors.
XSum expanded_words(const std::vector<ComboTerm>& terms);
HPComplex evaluate_cmzv(const CmzvExpr& expr, int digits);

}  // namespace apery
