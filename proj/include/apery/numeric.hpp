#pragma once

// Values with error estimates, complex elementary functions, polylogarithms
// and tail extrapolation of slowly convergent sequences.

#include <stdexcept>
#include <string>
#include <vector>

#include "apery/real.hpp"

namespace apery {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class AccelerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A real value with a heuristic error bound.
struct HPReal {
    Real value;
    Real err;
    long bits = working_bits();

    HPReal() = default;
    HPReal(Real v, Real e = Real(0)) : value(std::move(v)), err(std::move(e)) {}
};

/// A complex value with a heuristic error bound on its modulus.
struct HPComplex {
    Complex value;
    Real err;
    long bits = working_bits();

    HPComplex() = default;
    HPComplex(Complex v, Real e = Real(0)) : value(std::move(v)), err(std::move(e)) {}
    HPComplex(const HPReal& r) : value(r.value), err(r.err), bits(r.bits) {}
};

HPReal operator+(const HPReal& a, const HPReal& b);
HPReal operator-(const HPReal& a, const HPReal& b);
HPReal operator*(const HPReal& a, const HPReal& b);
HPComplex operator+(const HPComplex& a, const HPComplex& b);
HPComplex operator-(const HPComplex& a, const HPComplex& b);
HPComplex operator*(const HPComplex& a, const HPComplex& b);

enum class ElementaryFn { exp, log, atan, asin, sqrt, pow };

/// Principal-branch elementary function. `pow` uses `exponent` as the power.
/// Throws DomainError instead of producing NaN.
HPComplex elementary(ElementaryFn f, const HPComplex& z, const HPComplex& exponent = HPComplex(Complex(1)));

Complex cexp(const Complex& z);
Complex clog(const Complex& z);
Complex csqrt(const Complex& z);
Complex cpow(const Complex& z, long n);
Real arg(const Complex& z);

/// Classical polylogarithm Li_s(z), s >= 1, for any z not equal to 1 when s == 1.
Complex polylog(int s, const Complex& z);
/// Bernoulli numbers B_0..B_n (B_1 = -1/2), exact.
std::vector<mpq_class> bernoulli_numbers(int n);
/// Dirichlet beta function for s >= 1.
Real dirichlet_beta(int s);
/// Riemann zeta at an integer s >= 2.
Real zeta(int s);

/// Asymptotic model of S(N) - S(inf): sum over k >= 0 and 0 <= j <= log_powers of
/// c_{k,j} N^-(leading + k*step) log^j N.
struct TailModel {
    Real leading;
    Real step = Real(1);
    int log_powers = 0;
};

struct Extrapolation {
    Real value;
    Real err;
    int basis_used = 0;
};

/// Generalised Richardson extrapolation of partial sums S(N_i) under a tail model.
/// The error estimate is the difference of the two best consecutive orders.
Extrapolation accelerate(const std::vector<long>& n_values, const std::vector<Real>& partial_sums,
                         const TailModel& model);

/// Solves A x = b in place by Gaussian elimination with partial pivoting.
std::vector<Real> solve_linear(std::vector<std::vector<Real>> a, std::vector<Real> b);

/// Sum of an alternating series sum_{k>=0} (-1)^k a_k with a_k completely monotone,
/// using the Cohen–Villegas–Zagier weights. `term(k)` must return a_k.
template <class Term>
Real alternating_sum(Term term, int digits);

}  // namespace apery

#include "apery/numeric_impl.hpp"
