#include "apery/real.hpp"

#include <gmpxx.h>

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace apery {

namespace {

thread_local long tl_bits = bits_for_digits(40);

}  // namespace

long bits_for_digits(int digits) {
    return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 64;
}

long working_bits() { return tl_bits; }

Precision::Precision(int digits) : saved_(tl_bits) { tl_bits = bits_for_digits(digits); }
Precision::Precision(BitsTag, long bits) : saved_(tl_bits) { tl_bits = bits; }
Precision Precision::bits(long bits) { return Precision(BitsTag{}, bits); }
Precision::~Precision() { tl_bits = saved_; }

Real::Real() {
    mpfr_init2(v_, tl_bits);
    mpfr_set_zero(v_, 1);
}
Real::Real(int v) {
    mpfr_init2(v_, tl_bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
}
Real::Real(long v) {
    mpfr_init2(v_, tl_bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
}
Real::Real(double v) {
    mpfr_init2(v_, tl_bits);
    mpfr_set_d(v_, v, MPFR_RNDN);
}
Real::Real(const mpq_class& q) {
    mpfr_init2(v_, tl_bits);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}
Real::Real(std::string_view decimal) {
    mpfr_init2(v_, tl_bits);
    std::string s(decimal);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(v_)) {
        mpfr_clear(v_);
        throw std::invalid_argument("not a decimal number: " + s);
    }
}
Real::Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}
Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}
Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}
Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}
Real::~Real() { mpfr_clear(v_); }

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string Real::to_string(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
    if (is_zero()) return "0";
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);
    bool neg = !m.empty() && m[0] == '-';
    if (neg) m.erase(0, 1);
    std::string out;
    if (e > 0 && e <= static_cast<mpfr_exp_t>(m.size())) {
        out = m.substr(0, static_cast<size_t>(e)) + "." + m.substr(static_cast<size_t>(e));
    } else if (e <= 0 && e > -10) {
        out = "0." + std::string(static_cast<size_t>(-e), '0') + m;
    } else {
        out = m.substr(0, 1) + "." + m.substr(1) + "e" + std::to_string(e - 1);
    }
    if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
}

long Real::exponent2() const {
    if (!mpfr_regular_p(v_)) return -(1L << 40);
    return static_cast<long>(mpfr_get_exp(v_));
}

Real& Real::operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}
Real& Real::operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
Real& Real::operator/=(long o) {
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
Real Real::operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

Real Real::pi() {
    Real r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}
Real Real::log2() {
    Real r;
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
}
Real Real::catalan() {
    Real r;
    mpfr_const_catalan(r.v_, MPFR_RNDN);
    return r;
}
Real Real::zeta(unsigned long s) {
    Real r;
    mpfr_zeta_ui(r.v_, s, MPFR_RNDN);
    return r;
}
Real Real::epsilon() {
    Real r(1);
    mpfr_mul_2si(r.v_, r.v_, 1 - tl_bits, MPFR_RNDN);
    return r;
}

#define APERY_UNARY(name, fn)                     \
    Real name(const Real& x) {                    \
        Real r;                                   \
        fn(r.raw(), x.raw(), MPFR_RNDN);          \
        return r;                                 \
    }
APERY_UNARY(abs, mpfr_abs)
APERY_UNARY(sqrt, mpfr_sqrt)
APERY_UNARY(exp, mpfr_exp)
APERY_UNARY(log, mpfr_log)
APERY_UNARY(sin, mpfr_sin)
APERY_UNARY(cos, mpfr_cos)
APERY_UNARY(tan, mpfr_tan)
APERY_UNARY(atan, mpfr_atan)
APERY_UNARY(asin, mpfr_asin)
#undef APERY_UNARY

Real atan2(const Real& y, const Real& x) {
    Real r;
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
Real pow(const Real& x, const Real& y) {
    Real r;
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
Real pow(const Real& x, long n) {
    Real r;
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}
Real ldexp(const Real& x, long e) {
    Real r(x);
    mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}
Real floor(const Real& x) {
    Real r;
    mpfr_floor(r.raw(), x.raw());
    return r;
}
Real round_nearest(const Real& x) {
    Real r;
    mpfr_round(r.raw(), x.raw());
    return r;
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
    return os << x.to_string(static_cast<int>(os.precision() > 0 ? os.precision() : 20));
}

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}
Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}
Complex& Complex::operator*=(const Complex& o) {
    if (o.im.is_zero()) {
        re *= o.re;
        im *= o.re;
        return *this;
    }
    if (im.is_zero()) {
        Real r = re;
        re = r * o.re;
        im = r * o.im;
        return *this;
    }
    Real a = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(a);
    return *this;
}
Complex& Complex::operator/=(const Complex& o) {
    if (o.im.is_zero()) {
        re /= o.re;
        im /= o.re;
        return *this;
    }
    Real d = o.re * o.re + o.im * o.im;
    Real a = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(a);
    return *this;
}
Complex& Complex::operator*=(const Real& o) {
    re *= o;
    im *= o;
    return *this;
}
Complex& Complex::operator/=(const Real& o) {
    re /= o;
    im /= o;
    return *this;
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const Complex& z) {
    Real r;
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}
Real abs1(const Complex& z) { return abs(z.re) + abs(z.im); }
Complex mul_i(const Complex& z) { return {-z.im, z.re}; }

std::ostream& operator<<(std::ostream& os, const Complex& z) {
    os << z.re;
    if (!z.im.is_zero()) {
        os << (z.im.sign() < 0 ? " - " : " + ") << abs(z.im) << "i";
    }
    return os;
}

}  // namespace apery
