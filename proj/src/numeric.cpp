#include "apery/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace apery {

namespace {

Real ulp_of(const Real& v) { return abs(v) * Real::epsilon(); }

Real ulp_of(const Complex& v) { return abs1(v) * Real::epsilon(); }

Real max_of(const Real& a, const Real& b) { return a < b ? b : a; }

}  // namespace

HPReal operator+(const HPReal& a, const HPReal& b) {
    Real v = a.value + b.value;
    Real e = a.err + b.err + ulp_of(v);
    return {std::move(v), std::move(e)};
}
HPReal operator-(const HPReal& a, const HPReal& b) {
    Real v = a.value - b.value;
    Real e = a.err + b.err + ulp_of(v);
    return {std::move(v), std::move(e)};
}
HPReal operator*(const HPReal& a, const HPReal& b) {
    Real v = a.value * b.value;
    Real e = abs(a.value) * b.err + abs(b.value) * a.err + a.err * b.err + ulp_of(v);
    e = max_of(e, max_of(a.err, b.err));
    return {std::move(v), std::move(e)};
}
HPComplex operator+(const HPComplex& a, const HPComplex& b) {
    Complex v = a.value + b.value;
    Real e = a.err + b.err + ulp_of(v);
    return {std::move(v), std::move(e)};
}
HPComplex operator-(const HPComplex& a, const HPComplex& b) {
    Complex v = a.value - b.value;
    Real e = a.err + b.err + ulp_of(v);
    return {std::move(v), std::move(e)};
}
HPComplex operator*(const HPComplex& a, const HPComplex& b) {
    Complex v = a.value * b.value;
    Real e = abs(a.value) * b.err + abs(b.value) * a.err + a.err * b.err + ulp_of(v);
    e = max_of(e, max_of(a.err, b.err));
    return {std::move(v), std::move(e)};
}

Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex cexp(const Complex& z) {
    Real m = exp(z.re);
    if (z.im.is_zero()) return Complex(m);
    return {m * cos(z.im), m * sin(z.im)};
}

Complex clog(const Complex& z) {
    if (z.is_zero()) throw DomainError("log of zero");
    if (z.im.is_zero() && z.re.sign() > 0) return Complex(log(z.re));
    return {log(abs(z)), arg(z)};
}

Complex csqrt(const Complex& z) {
    if (z.is_zero()) return Complex(Real(0));
    if (z.im.is_zero()) {
        if (z.re.sign() > 0) return Complex(sqrt(z.re));
        return {Real(0), sqrt(-z.re)};
    }
    Real r = abs(z);
    if (z.re.sign() >= 0) {
        Real t = sqrt((r + z.re) / 2);
        return {t, z.im / (t * 2)};
    }
    Real t = sqrt((r - z.re) / 2);
    Real re = abs(z.im) / (t * 2);
    return {re, z.im.sign() < 0 ? -t : t};
}

Complex cpow(const Complex& z, long n) {
    Complex base = n < 0 ? Complex(1) / z : z;
    Complex out(1);
    for (long k = n < 0 ? -n : n; k > 0; k >>= 1) {
        if (k & 1) out *= base;
        base *= base;
    }
    return out;
}

HPComplex elementary(ElementaryFn f, const HPComplex& zin, const HPComplex& w) {
    const Complex& z = zin.value;
    const bool real_arg = z.im.is_zero();
    Complex v;
    Real deriv;  // |f'(z)|, for error propagation
    Real extra(0);
    switch (f) {
        case ElementaryFn::exp:
            v = cexp(z);
            deriv = abs(v);
            break;
        case ElementaryFn::log:
            if (z.is_zero()) throw DomainError("log: argument is zero");
            v = clog(z);
            deriv = Real(1) / abs(z);
            break;
        case ElementaryFn::sqrt:
            v = csqrt(z);
            deriv = v.is_zero() ? Real(0) : Real(1) / (abs(v) * 2);
            break;
        case ElementaryFn::atan: {
            if (real_arg) {
                v = Complex(atan(z.re));
            } else {
                Complex iz = mul_i(z);
                Complex one(1);
                if ((one - iz).is_zero() || (one + iz).is_zero()) throw DomainError("atan: argument is +-i");
                Complex d = clog(one - iz) - clog(one + iz);
                v = mul_i(d) / Real(2);
            }
            Complex den = Complex(1) + z * z;
            if (den.is_zero()) throw DomainError("atan: argument is +-i");
            deriv = Real(1) / abs(den);
            break;
        }
        case ElementaryFn::asin: {
            if (real_arg && abs(z.re) <= Real(1)) {
                v = Complex(asin(z.re));
            } else {
                Complex root = csqrt(Complex(1) - z * z);
                Complex t = mul_i(z) + root;
                v = -mul_i(clog(t));
            }
            Complex root = csqrt(Complex(1) - z * z);
            deriv = root.is_zero() ? Real(0) : Real(1) / abs(root);
            break;
        }
        case ElementaryFn::pow: {
            if (z.is_zero()) {
                if (w.value.im.is_zero() && w.value.re.sign() > 0) {
                    v = Complex(Real(0));
                    deriv = Real(0);
                    break;
                }
                throw DomainError("pow: zero base with non-positive exponent");
            }
            Complex lz = clog(z);
            v = cexp(w.value * lz);
            deriv = abs(w.value) * abs(v) / abs(z);
            extra = abs(lz) * abs(v) * w.err;
            break;
        }
    }
    if (!v.re.is_finite() || !v.im.is_finite()) throw DomainError("elementary: non-finite result");
    Real e = deriv * zin.err + extra + ulp_of(v) * 4;
    return {std::move(v), std::move(e)};
}

std::vector<mpq_class> bernoulli_numbers(int n) {
    static std::mutex mu;
    static std::vector<mpq_class> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<int>(cache.size()) <= n) {
        // B_m = -1/(m+1) sum_{k<m} C(m+1,k) B_k
        std::vector<mpq_class> b(cache);
        if (b.empty()) b.push_back(mpq_class(1));
        for (int m = static_cast<int>(b.size()); m <= n; ++m) {
            mpq_class s(0);
            mpz_class binom(1);  // C(m+1, 0)
            for (int k = 0; k < m; ++k) {
                s += binom * b[k];
                binom = binom * (m + 1 - k) / (k + 1);
            }
            mpq_class bm = -s / (m + 1);
            bm.canonicalize();
            b.push_back(bm);
        }
        cache = std::move(b);
    }
    return std::vector<mpq_class>(cache.begin(), cache.begin() + n + 1);
}

Real zeta(int s) {
    if (s < 2) throw DomainError("zeta: s must be >= 2");
    return Real::zeta(static_cast<unsigned long>(s));
}

Real dirichlet_beta(int s) {
    if (s < 1) throw DomainError("beta: s must be >= 1");
    if (s == 1) return Real::pi() / 4;
    int digits = static_cast<int>(working_bits() / 3.33) + 2;
    return alternating_sum([s](int k) { return Real(1) / pow(Real(2 * k + 1), static_cast<long>(s)); }, digits);
}

namespace {

// zeta(m) for any integer m != 1.
Real zeta_any(int m) {
    if (m >= 2) return Real::zeta(static_cast<unsigned long>(m));
    if (m == 0) return Real(-0.5);
    int n = -m;  // zeta(-n) = (-1)^n B_{n+1}/(n+1)
    auto b = bernoulli_numbers(n + 1);
    mpq_class v = b[n + 1] / (n + 1);
    if (n % 2 == 1) v = -v;
    return Real(v);
}

Complex polylog_series(int s, const Complex& z) {
    Complex sum(Real(0));
    Complex p = z;
    Real tol = Real::epsilon();
    for (long n = 1;; ++n) {
        Complex t = p / pow(Real(n), static_cast<long>(s));
        sum += t;
        if (abs1(t) < tol * (abs1(sum) + Real(1e-300)) && n > 3) break;
        p *= z;
        if (n > 100000) throw DomainError("polylog series did not converge");
    }
    return sum;
}

// Expansion in mu = log z, valid for |mu| < 2 pi.
Complex polylog_log_expansion(int s, const Complex& z) {
    Complex mu = clog(z);
    Complex sum(Real(0));
    Complex p(1);  // mu^k / k!
    Real tol = Real::epsilon();
    Real harmonic(0);
    for (int k = 1; k <= s - 1; ++k) harmonic += Real(1) / Real(k);
    int quiet = 0;
    for (int k = 0; k < 4000; ++k) {
        Complex t;
        if (k == s - 1) {
            t = p * (Complex(harmonic) - clog(-mu));
        } else {
            int m = s - k;
            if (m < 0 && (-m) % 2 == 0) {
                t = Complex(Real(0));
            } else {
                t = p * zeta_any(m);
            }
        }
        sum += t;
        if (k > s + 2) {
            if (abs1(t) < tol * (abs1(sum) + Real(1e-300))) {
                if (++quiet >= 3) break;
            } else {
                quiet = 0;
            }
        }
        p = p * mu / Real(k + 1);
    }
    return sum;
}

Complex bernoulli_poly(int s, const Complex& x) {
    auto b = bernoulli_numbers(s);
    Complex out(Real(0));
    mpz_class binom(1);
    for (int k = 0; k <= s; ++k) {
        out += cpow(x, s - k) * Real(mpq_class(binom * b[k]));
        binom = binom * (s - k) / (k + 1);
    }
    return out;
}

}  // namespace

Complex polylog(int s, const Complex& z) {
    if (s < 1) throw DomainError("polylog: s must be >= 1");
    if (z.is_zero()) return Complex(Real(0));
    if (s == 1) {
        Complex w = Complex(1) - z;
        if (w.is_zero()) throw DomainError("Li_1(1) diverges");
        return -clog(w);
    }
    if (z.im.is_zero() && z.re == Real(1)) return Complex(Real::zeta(static_cast<unsigned long>(s)));
    Real r = abs(z);
    if (r <= Real(0.75)) return polylog_series(s, z);
    if (r >= Real(1) / Real(0.75)) {
        // Li_s(z) + (-1)^s Li_s(1/z) = -(2 pi i)^s / s! B_s(1/2 + log(-z)/(2 pi i))
        Complex inv = polylog_series(s, Complex(1) / z);
        Complex twopii(Real(0), Real::pi() * 2);
        Complex arg = Complex(Real(0.5)) + clog(-z) / twopii;
        Real fact(1);
        for (int k = 2; k <= s; ++k) fact *= k;
        Complex rhs = -(cpow(twopii, s) / fact) * bernoulli_poly(s, arg);
        return s % 2 == 0 ? rhs - inv : rhs + inv;
    }
    return polylog_log_expansion(s, z);
}

std::vector<Real> solve_linear(std::vector<std::vector<Real>> a, std::vector<Real> b) {
    const size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        Real best = abs(a[col][col]);
        for (size_t r = col + 1; r < n; ++r) {
            Real v = abs(a[r][col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best.is_zero()) throw std::runtime_error("singular linear system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Real f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Real> x(n);
    for (size_t k = n; k-- > 0;) {
        Real s = b[k];
        for (size_t c = k + 1; c < n; ++c) s -= a[k][c] * x[c];
        x[k] = s / a[k][k];
    }
    return x;
}

Extrapolation accelerate(const std::vector<long>& n_values, const std::vector<Real>& sums, const TailModel& model) {
    if (n_values.size() != sums.size()) throw std::invalid_argument("accelerate: size mismatch");
    const size_t m = sums.size();
    if (m < 3) throw AccelerationError("accelerate: need at least 3 partial sums");
    bool constant = true;
    for (size_t k = 1; k < m; ++k)
        if (!(sums[k] == sums[0])) constant = false;
    if (constant) return {sums[0], Real(0), 0};

    // basis functions in order of decreasing size
    const int jmax = model.log_powers;
    std::vector<std::pair<int, int>> basis;
    for (int k = 0; static_cast<int>(basis.size()) < static_cast<int>(m); ++k)
        for (int j = jmax; j >= 0; --j) basis.push_back({k, j});

    auto phi = [&](size_t b, long n) {
        Real nn(n);
        Real e = model.leading + model.step * Real(basis[b].first);
        Real v = Real(1) / pow(nn, e);
        if (basis[b].second > 0) v *= pow(log(nn), static_cast<long>(basis[b].second));
        return v;
    };

    // estimate of order r uses the last r+1 points and r basis functions
    std::vector<Real> est;
    for (size_t r = 0; r + 1 <= m; ++r) {
        size_t first = m - 1 - r;
        size_t dim = r + 1;
        std::vector<std::vector<Real>> a(dim, std::vector<Real>(dim));
        std::vector<Real> rhs(dim);
        for (size_t i = 0; i < dim; ++i) {
            long n = n_values[first + i];
            a[i][0] = Real(1);
            for (size_t b = 0; b < r; ++b) a[i][b + 1] = phi(b, n);
            rhs[i] = sums[first + i];
        }
        est.push_back(solve_linear(std::move(a), std::move(rhs))[0]);
    }
    // choose the order with the smallest consecutive difference
    size_t best = est.size() - 1;
    Real best_diff;
    bool have = false;
    for (size_t r = 2; r < est.size(); ++r) {
        Real d = abs(est[r] - est[r - 1]);
        if (!have || d < best_diff) {
            best_diff = d;
            best = r;
            have = true;
        }
    }
    if (!have) {
        best = est.size() - 1;
        best_diff = abs(est[best] - est[best - 1]);
    }
    Real scale = abs(est[best]) + Real(1);
    if (!(best_diff < scale * Real(1e-4))) {
        std::ostringstream os;
        os << "acceleration failed: best column difference " << best_diff.to_string(6) << " at order " << best
           << " of " << est.size() - 1;
        throw AccelerationError(os.str());
    }
    return {est[best], best_diff, static_cast<int>(best)};
}

}  // namespace apery
