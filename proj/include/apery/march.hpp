#pragma once

// Iterated integrals by marching truncated log-power series between expansion
// centers. For a word a_1 ... a_m and upper end b, M_k(s) = int_s^b a_1 ... a_k
// solves dM_k/ds = -f_k(s) M_{k-1}(s) with M_0 = 1, M_k(b) = 0; the integral is M_m(a).

#include <vector>

#include "apery/numeric.hpp"
#include "apery/words.hpp"

namespace apery {

/// sum_{j, n >= -1} c[j][n + 1] v^n log^j v
class LogPowerSeries {
public:
    LogPowerSeries() = default;
    LogPowerSeries(int terms, int logs);

    int terms() const { return terms_; }
    int logs() const { return static_cast<int>(c_.size()); }
    Complex& at(int j, int n) { return c_[j][n + 1]; }
    const Complex& at(int j, int n) const { return c_[j][n + 1]; }
    void ensure_logs(int logs);

    /// Value at v > 0; at v = 0 the regularized value (log 0 = 0, positive powers vanish).
    Complex eval(const Real& v) const;
    /// Bound on the truncation error at v from the last coefficients.
    Real tail_bound(const Real& v, const Real& radius) const;

private:
    int terms_ = 0;
    std::vector<std::vector<Complex>> c_;
};

/// Regularized antiderivative vanishing at v = 0.
LogPowerSeries integrate(const LogPowerSeries& g);

/// Expansion length giving `digits` digits at half the convergence radius.
int series_terms(int digits);

/// int_a^1 of a composite x word, 0 <= a < 1.
HPComplex march_x(const CompositeWord& w, const Real& a, int digits);
HPComplex march_x(const XWord& w, const Real& a, int digits);

/// int_u^1 w as a log-power series in u near 0 (valid for 0 < u < 1).
LogPowerSeries march_x_near_zero(const CompositeWord& w, int digits);

/// int_0^x of an omega word, 0 < x <= 1, through t = sin(theta).
HPComplex march_omega(const OmegaWord& w, const Real& x, int digits);

}  // namespace apery
