#pragma once

// Block rules: a canonical series at x equals a sum of prefactor(x) times an
// iterated integral of omega forms over [0, x].

#include <vector>

#include "apery/series.hpp"
#include "apery/words.hpp"

namespace apery {

/// f1 = 1, f2 = x/sqrt(1-x^2), f3 = 1/x, f5 = x, f20 = 1/(x sqrt(1-x^2)).
enum class Prefactor { f1, f2, f3, f5, f20 };

std::string prefactor_tag(Prefactor p);
Real prefactor_value(Prefactor p, const Real& x);

struct PrefactoredTerm {
    GaussianRational coeff;
    Prefactor prefactor;
    OmegaWord word;
};

struct PrefactoredIntegral {
    std::vector<PrefactoredTerm> terms;
    bool squared = false;  // built by the squared-binomial head rules, valid at x = 1 only
};

class CompileError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Binomial power 1. Junctions must be native; n factors are read as 2^s/(2n)^s.
/// In canonical mode o- is refused outside the head; native mode allows o- middles.
PrefactoredIntegral compile(const SeriesSpec& spec, bool native = false);

/// Binomial power 2 at x = 1, s1 >= 3.
PrefactoredIntegral compile_squared(const SeriesSpec& spec, bool native = false);

/// w0^{s1-1} w2 ... w0^{sd-1} w8: its integral over [0, x] is
/// sum_{n_1 > ... > n_d >= 0} x^{2 n_1 + 1} / prod (2 n_j + 1)^{s_j}.
OmegaWord odd_power_word(const std::vector<int>& s);

/// Text form "(coeff) [f3] w3 | w1".
std::string to_string(const PrefactoredTerm& t);

}  // namespace apery
