#include "apery/march.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace apery {

LogPowerSeries::LogPowerSeries(int terms, int logs) : terms_(terms) { ensure_logs(logs); }

void LogPowerSeries::ensure_logs(int logs) {
    while (static_cast<int>(c_.size()) < logs) c_.emplace_back(static_cast<size_t>(terms_ + 1), Complex(0));
}

Complex LogPowerSeries::eval(const Real& v) const {
    if (v.is_zero()) return c_.empty() ? Complex(0) : c_[0][1];
    Real lv = log(v);
    Real inv = Real(1) / v;
    Complex total(0);
    Real lp(1);
    for (const auto& row : c_) {
        // Horner over n = terms-1 .. 0, then the 1/v term
        Complex acc(0);
        for (int n = terms_ - 1; n >= 0; --n) {
            acc *= v;
            acc += row[n + 1];
        }
        acc += row[0] * inv;
        acc *= lp;
        total += acc;
        lp *= lv;
    }
    return total;
}

Real LogPowerSeries::tail_bound(const Real& v, const Real& radius) const {
    if (v.is_zero() || terms_ < 4) return Real(0);
    Real ratio = v / radius;
    Real lv = abs(log(v)) + 1;
    Real bound(0);
    Real lp(1);
    for (const auto& row : c_) {
        // largest of the last few coefficients, scaled to radius^n
        Real worst(0);
        for (int n = terms_ - 3; n < terms_; ++n) {
            Real c = abs1(row[n + 1]) * pow(radius, static_cast<long>(n));
            if (c > worst) worst = c;
        }
        bound += worst * lp;
        lp *= lv;
    }
    Real geom = pow(ratio, static_cast<long>(terms_)) / (Real(1) - ratio);
    return bound * geom * 4;
}

LogPowerSeries integrate(const LogPowerSeries& g) {
    const int terms = g.terms();
    LogPowerSeries out(terms, g.logs() + 1);
    for (int j = 0; j < g.logs(); ++j) {
        // n = -1: log^{j+1}/(j+1)
        const Complex& r = g.at(j, -1);
        if (!r.is_zero()) out.at(j + 1, 0) += r / Real(j + 1);
        for (int n = 0; n + 1 < terms; ++n) {
            const Complex& c = g.at(j, n);
            if (c.is_zero()) continue;
            // int_0^v w^n log^j w = v^{n+1} sum_i (-1)^i j!/(j-i)! log^{j-i} v / (n+1)^{i+1}
            Real k = Real(1) / Real(n + 1);
            Complex term = c * k;
            for (int i = 0; i <= j; ++i) {
                out.at(j - i, n + 1) += term;
                term *= k;
                term *= Real(-(j - i));
            }
        }
    }
    return out;
}

int series_terms(int digits) { return static_cast<int>(std::ceil(3.33 * (digits + 12))) + 12; }

namespace {

using Multiply = std::function<LogPowerSeries(const LogPowerSeries&, size_t)>;

struct Segment {
    std::vector<Complex> values;  // M_k at v_eval
    LogPowerSeries last;          // M_m as a series at this center
    Real err;
};

// M_k values known at v_match; expand about the center and evaluate at v_eval.
Segment run_segment(size_t m, const Multiply& multiply, int sigma, const std::vector<Complex>& match,
                    const Real& v_match, const Real& v_eval, const Real& radius, int terms) {
    Segment out;
    out.values.assign(m + 1, Complex(0));
    out.values[0] = Complex(1);
    out.err = Real(0);
    LogPowerSeries prev(terms, 1);
    prev.at(0, 0) = Complex(1);
    Real scale(1);
    for (size_t k = 1; k <= m; ++k) {
        LogPowerSeries g = multiply(prev, k - 1);
        if (sigma > 0) {
            for (int j = 0; j < g.logs(); ++j)
                for (int n = -1; n < terms; ++n) g.at(j, n) = -g.at(j, n);
        }
        LogPowerSeries integral = integrate(g);
        Complex c = match[k] - integral.eval(v_match);
        integral.at(0, 0) += c;
        out.values[k] = integral.eval(v_eval);
        out.err += integral.tail_bound(v_match, radius) + integral.tail_bound(v_eval, radius);
        Real mag = abs1(out.values[k]);
        if (mag > scale) scale = mag;
        prev = std::move(integral);
    }
    out.err += scale * Real::epsilon() * Real(static_cast<long>(terms) * 16);
    out.last = std::move(prev);
    return out;
}

// Monomial x letters about a center: 1/(D - sigma v)^order, sign -1 for a = -x_0.
struct PoleTerm {
    Complex coeff;
    Complex inv_d;
    bool pole;
    int order;
};

Complex root_value(XSym s) {
    switch (s) {
        case XSym::xp1: return Complex(1);
        case XSym::xm1: return Complex(-1);
        case XSym::xpi:
        case XSym::qpi: return Complex(Real(0), Real(1));
        case XSym::xmi:
        case XSym::qmi: return Complex(Real(0), Real(-1));
        case XSym::a: return Complex(0);
    }
    return Complex(0);
}

std::vector<PoleTerm> letter_terms(const XComposite& letter, const Real& center) {
    std::vector<PoleTerm> out;
    for (int k = 0; k < kXSymCount; ++k) {
        const auto& gc = letter.coeff[k];
        if (gc.is_zero()) continue;
        XSym s = static_cast<XSym>(k);
        Complex coeff = gc.to_complex();
        if (s == XSym::a) coeff = -coeff;
        Complex d = root_value(s) - Complex(center);
        int order = (s == XSym::qpi || s == XSym::qmi) ? 2 : 1;
        bool pole = d.is_zero();
        if (pole && order == 2) throw std::logic_error("double pole on the integration path");
        out.push_back({coeff, pole ? Complex(0) : Complex(1) / d, pole, order});
    }
    return out;
}

LogPowerSeries multiply_letter(const LogPowerSeries& h, const std::vector<PoleTerm>& letter, int sigma) {
    const int terms = h.terms();
    LogPowerSeries out(terms, h.logs());
    std::vector<Complex> g(static_cast<size_t>(terms));
    for (const auto& t : letter) {
        for (int j = 0; j < h.logs(); ++j) {
            if (t.pole) {
                // 1/(-sigma v)
                for (int n = -1; n + 1 < terms; ++n) {
                    const Complex& src = h.at(j, n + 1);
                    if (src.is_zero()) continue;
                    Complex v = src * t.coeff;
                    if (sigma > 0) out.at(j, n) -= v;
                    else out.at(j, n) += v;
                }
                continue;
            }
            // g_n = (h_n + sigma g_{n-1}) / D, applied `order` times
            for (int n = 0; n < terms; ++n) g[n] = h.at(j, n);
            for (int rep = 0; rep < t.order; ++rep) {
                Complex prev(0);
                for (int n = 0; n < terms; ++n) {
                    if (sigma > 0) g[n] += prev;
                    else g[n] -= prev;
                    g[n] *= t.inv_d;
                    prev = g[n];
                }
            }
            for (int n = 0; n < terms; ++n) {
                g[n] *= t.coeff;
                out.at(j, n) += g[n];
            }
        }
    }
    return out;
}

struct XSegments {
    std::vector<std::vector<PoleTerm>> at_one, at_zero;
};

XSegments x_letters(const CompositeWord& w) {
    XSegments s;
    for (const auto& l : w) {
        s.at_one.push_back(letter_terms(l, Real(1)));
        s.at_zero.push_back(letter_terms(l, Real(0)));
    }
    return s;
}

}  // namespace

HPComplex march_x(const CompositeWord& w, const Real& a, int digits) {
    if (a < Real(0) || !(a < Real(1))) throw std::invalid_argument("march_x: need 0 <= a < 1");
    Precision prec(digits + 20);
    const size_t m = w.size();
    if (m == 0) return HPComplex(Complex(1));
    const int terms = series_terms(digits);
    XSegments letters = x_letters(w);
    std::vector<Complex> start(m + 1, Complex(0));
    start[0] = Complex(1);
    Multiply at_one = [&](const LogPowerSeries& h, size_t k) { return multiply_letter(h, letters.at_one[k], -1); };
    Real a_real(a);
    if (a >= Real("0.5")) {
        Segment s = run_segment(m, at_one, -1, start, Real(0), Real(1) - a_real, Real(1), terms);
        return HPComplex(s.values[m], s.err);
    }
    Segment s1 = run_segment(m, at_one, -1, start, Real(0), Real("0.5"), Real(1), terms);
    Multiply at_zero = [&](const LogPowerSeries& h, size_t k) { return multiply_letter(h, letters.at_zero[k], 1); };
    Segment s2 = run_segment(m, at_zero, 1, s1.values, Real("0.5"), a_real, Real(1), terms);
    return HPComplex(s2.values[m], s1.err + s2.err);
}

HPComplex march_x(const XWord& w, const Real& a, int digits) {
    CompositeWord cw;
    for (XSym s : w) cw.push_back(XComposite::monomial(s));
    return march_x(cw, a, digits);
}

LogPowerSeries march_x_near_zero(const CompositeWord& w, int digits) {
    Precision prec(digits + 20);
    const size_t m = w.size();
    const int terms = series_terms(digits);
    if (m == 0) {
        LogPowerSeries one(terms, 1);
        one.at(0, 0) = Complex(1);
        return one;
    }
    XSegments letters = x_letters(w);
    std::vector<Complex> start(m + 1, Complex(0));
    start[0] = Complex(1);
    Multiply at_one = [&](const LogPowerSeries& h, size_t k) { return multiply_letter(h, letters.at_one[k], -1); };
    Segment s1 = run_segment(m, at_one, -1, start, Real(0), Real("0.5"), Real(1), terms);
    Multiply at_zero = [&](const LogPowerSeries& h, size_t k) { return multiply_letter(h, letters.at_zero[k], 1); };
    Segment s2 = run_segment(m, at_zero, 1, s1.values, Real("0.5"), Real(0), Real(1), terms);
    return s2.last;
}

namespace {

// Dense Laurent coefficients from v^-1 up to v^{terms-1}.
using Dense = std::vector<Real>;

Dense reciprocal(const Dense& f, int terms) {
    // f has no v^-1 term here and f_0 != 0 (index shift by one)
    Dense g(static_cast<size_t>(terms), Real(0));
    g[0] = Real(1) / f[0];
    for (int n = 1; n < terms; ++n) {
        Real acc(0);
        for (int k = 1; k <= n; ++k) acc += f[k] * g[n - k];
        g[n] = -acc * g[0];
    }
    return g;
}

Dense product(const Dense& a, const Dense& b, int terms) {
    Dense c(static_cast<size_t>(terms), Real(0));
    for (int n = 0; n < terms; ++n)
        for (int k = 0; k <= n; ++k) c[n] += a[k] * b[n - k];
    return c;
}

struct ThetaSeries {
    // index n + 1 for v^n
    Dense cot, tan, csc, sec, sin, cos, one;
};

ThetaSeries theta_series(int terms) {
    int t = terms + 2;
    Dense s_over_v(static_cast<size_t>(t), Real(0)), c(static_cast<size_t>(t), Real(0));
    Real fact(1);
    for (int n = 0; n < 2 * t + 2; ++n) {
        if (n > 0) fact *= Real(n);
        int sign = (n / 2) % 2 ? -1 : 1;
        if (n % 2 == 0 && n < t) c[n] = Real(sign) / fact;
        if (n % 2 == 1 && n - 1 < t) s_over_v[n - 1] = Real(sign) / fact;
    }
    Dense inv_s = reciprocal(s_over_v, t);
    Dense inv_c = reciprocal(c, t);
    auto lift = [terms](const Dense& d, int shift) {
        // shift 0: d holds v^0..; shift -1: d holds v^-1..
        Dense out(static_cast<size_t>(terms + 1), Real(0));
        for (int n = -1; n < terms; ++n) {
            int idx = n - shift;
            if (idx >= 0 && idx < static_cast<int>(d.size())) out[n + 1] = d[idx];
        }
        return out;
    };
    ThetaSeries ts;
    Dense sin_dense(static_cast<size_t>(t), Real(0));
    for (int n = 1; n < t; ++n) sin_dense[n] = s_over_v[n - 1];
    ts.sin = lift(sin_dense, 0);
    ts.cos = lift(c, 0);
    ts.tan = lift(product(sin_dense, inv_c, t), 0);
    ts.sec = lift(inv_c, 0);
    ts.csc = lift(inv_s, -1);
    ts.cot = lift(product(c, inv_s, t), -1);
    ts.one = lift(Dense{Real(1)}, 0);
    return ts;
}

Dense theta_letter(Omega w, const ThetaSeries& ts, bool at_half_pi) {
    auto sum = [](const Dense& a, const Dense& b) {
        Dense c = a;
        for (size_t k = 0; k < c.size(); ++k) c[k] += b[k];
        return c;
    };
    switch (w) {
        case Omega::w0: return at_half_pi ? ts.tan : ts.cot;
        case Omega::w1: return ts.one;
        case Omega::w2: return at_half_pi ? ts.cot : ts.tan;
        case Omega::w3: return at_half_pi ? ts.sec : ts.csc;
        case Omega::w5: return at_half_pi ? ts.cos : ts.sin;
        case Omega::w8: return at_half_pi ? ts.csc : ts.sec;
        case Omega::w20: return sum(ts.cot, ts.tan);
        case Omega::wdt: return at_half_pi ? ts.sin : ts.cos;
    }
    return ts.one;
}

LogPowerSeries multiply_dense(const LogPowerSeries& h, const Dense& f) {
    const int terms = h.terms();
    LogPowerSeries out(terms, h.logs());
    int f_hi = -1;
    for (int n = terms - 1; n >= -1; --n)
        if (!f[n + 1].is_zero()) {
            f_hi = n;
            break;
        }
    for (int j = 0; j < h.logs(); ++j) {
        int h_hi = -1;
        for (int n = terms - 1; n >= 0; --n)
            if (!h.at(j, n).is_zero()) {
                h_hi = n;
                break;
            }
        if (h_hi < 0) continue;
        for (int k = -1; k <= f_hi; ++k) {
            const Real& fk = f[k + 1];
            if (fk.is_zero()) continue;
            for (int n = 0; n <= h_hi && n + k < terms; ++n) out.at(j, n + k) += h.at(j, n) * fk;
        }
    }
    return out;
}

}  // namespace

HPComplex march_omega(const OmegaWord& w, const Real& x, int digits) {
    if (!(x > Real(0)) || x > Real(1)) throw std::invalid_argument("march_omega: need 0 < x <= 1");
    Precision prec(digits + 20);
    const size_t m = w.size();
    if (m == 0) return HPComplex(Complex(1));
    const int terms = series_terms(digits);
    ThetaSeries ts = theta_series(terms);
    Real half_pi = Real::pi() / 2;
    Real quarter_pi = half_pi / 2;
    Real theta = x == Real(1) ? half_pi : asin(x);
    std::vector<Complex> start(m + 1, Complex(0));
    start[0] = Complex(1);
    std::vector<Dense> near_zero, near_half_pi;
    for (Omega l : w) {
        near_zero.push_back(theta_letter(l, ts, false));
        near_half_pi.push_back(theta_letter(l, ts, true));
    }
    Multiply at_zero = [&](const LogPowerSeries& h, size_t k) { return multiply_dense(h, near_zero[k]); };
    if (theta <= quarter_pi) {
        Segment s = run_segment(m, at_zero, 1, start, theta, Real(0), half_pi, terms);
        return HPComplex(s.values[m], s.err);
    }
    Multiply at_half = [&](const LogPowerSeries& h, size_t k) { return multiply_dense(h, near_half_pi[k]); };
    Segment s1 = run_segment(m, at_half, -1, start, half_pi - theta, quarter_pi, half_pi, terms);
    Segment s2 = run_segment(m, at_zero, 1, s1.values, quarter_pi, Real(0), half_pi, terms);
    return HPComplex(s2.values[m], s1.err + s2.err);
}

}  // namespace apery
