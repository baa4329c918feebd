#pragma once

// t = (1-u^2)/(1+u^2) turns an omega word on [0, x] into an x-alphabet word on
// [lambda(x), 1] with lambda(x) = sqrt((1-x)/(1+x)), reversed and signed.

#include <string>
#include <vector>

#include "apery/compiler.hpp"
#include "apery/words.hpp"

namespace apery {

/// Pull-back of one omega letter as a combination of x letters.
XComposite omega_image(Omega w);

struct CovTerm {
    GaussianRational coeff;
    Prefactor prefactor;
    CompositeWord word;  // integrated over [lambda(x), 1]
};

/// (-1)^m phi(reverse(w)) for each term.
std::vector<CovTerm> to_x_alphabet(const PrefactoredIntegral& pi);
CompositeWord omega_to_x(const OmegaWord& w, int& sign);

Real cov_lambda(const Real& x);

/// Density of an omega letter in t: omega = density(t) dt.
Real omega_density(Omega w, const Real& t);
/// Density of a composite x letter in u.
Complex x_density(const XComposite& letter, const Real& u);
/// omega(t(u)) t'(u) with t = (1 - u^2)/(1 + u^2).
Real omega_pullback(Omega w, const Real& u);

struct AdmissibilityReport {
    bool ok = true;
    std::vector<XWord> offending;
};
AdmissibilityReport admissible_check(const XSum& words);

std::string to_string(const CovTerm& t);

}  // namespace apery
