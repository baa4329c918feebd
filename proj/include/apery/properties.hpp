#pragma once

// Randomized algebraic and numeric invariants of the pipeline, run by the self test
// and the acceptance suite.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "apery/series.hpp"
#include "apery/words.hpp"

namespace apery {

/// A valid spec of depth <= max_depth and weight <= max_weight at x2 with random forms and junctions.
SeriesSpec random_spec(std::mt19937_64& rng, const mpq_class& x2, int max_depth = 3, int max_weight = 6);

struct PropertyResult {
    std::string name;
    bool pass = false;
    int cases = 0;
    std::string detail;  // first failure or a summary figure
    double seconds = 0;
};

/// Monomial x words of weight <= max_weight from the canonical pipeline of the x = 1 golden specs.
std::vector<XWord> corpus_words(int max_weight);

PropertyResult check_shuffle_algebra(std::uint64_t seed);
PropertyResult check_shuffle_homomorphism(std::uint64_t seed);
PropertyResult check_reg_roundtrip(std::uint64_t seed);
PropertyResult check_reversal(std::uint64_t seed);
PropertyResult check_letter_pullbacks();
PropertyResult check_prefactor_identity();
PropertyResult check_cov_numeric(std::uint64_t seed);
PropertyResult check_compile_bookkeeping(std::uint64_t seed);
PropertyResult check_engine_agreement();
PropertyResult check_corpus_admissible();

std::vector<PropertyResult> run_properties(std::uint64_t seed = 20240607);

}  // namespace apery
