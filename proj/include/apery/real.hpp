#pragma once

// Arbitrary precision real and complex scalars on top of MPFR.
//
// Every Real carries its own mantissa precision. Newly constructed values use
// the calling thread's working precision, which is set by a Precision scope.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace apery {

/// Bits needed for `digits` decimal digits plus 64 guard bits.
long bits_for_digits(int digits);

/// Current thread's working precision in bits.
long working_bits();

/// RAII scope that sets the working precision of the current thread.
class Precision {
public:
    explicit Precision(int digits);
    static Precision bits(long bits);
    ~Precision();
    Precision(const Precision&) = delete;
    Precision& operator=(const Precision&) = delete;

private:
    struct BitsTag {};
    Precision(BitsTag, long bits);
    long saved_;
};

class Real {
public:
    Real();
    Real(int v);
    Real(long v);
    Real(double v);
    Real(const mpq_class& q);
    explicit Real(std::string_view decimal);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }

    double to_double() const;
    std::string to_string(int digits) const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// Binary exponent e with 0.5 <= |x|/2^e < 1, or a very negative value for zero.
    long exponent2() const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real& operator*=(long o);
    Real& operator/=(long o);
    Real operator-() const;

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    friend Real operator*(Real a, long b) { return a *= b; }
    friend Real operator/(Real a, long b) { return a /= b; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const Real& a, const Real& b);

    static Real pi();
    static Real log2();
    static Real catalan();
    static Real zeta(unsigned long s);
    static Real epsilon();  // 2^(1 - working_bits)

private:
    mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real asin(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real ldexp(const Real& x, long e);
Real floor(const Real& x);
Real round_nearest(const Real& x);

std::ostream& operator<<(std::ostream& os, const Real& x);

struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(int r) : re(r), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex& operator*=(const Real& o);
    Complex& operator/=(const Real& o);
    Complex operator-() const { return {-re, -im}; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator*(Complex a, const Real& b) { return a *= b; }
    friend Complex operator/(Complex a, const Real& b) { return a /= b; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

Complex conj(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
/// Cheap magnitude bound: |re| + |im|.
Real abs1(const Complex& z);
Complex mul_i(const Complex& z);
std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace apery
