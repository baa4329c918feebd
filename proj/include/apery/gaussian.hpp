#pragma once

// Exact Gaussian rationals, the coefficient field of every symbolic stage.

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "apery/real.hpp"

namespace apery {

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im = 0);
    static GaussianRational i() { return {0, 1}; }
    /// Parses "3", "-2/5", "i", "1/2-3/4i", "(1+i)".
    static GaussianRational parse(const std::string& text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational pow(int n) const;
    Complex to_complex() const;
    std::string to_string() const;

private:
    void canonicalize();
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

/// Parses an exact rational "p/q", "p", or a terminating decimal like "0.25".
mpq_class parse_rational(const std::string& text);
std::string rational_to_string(const mpq_class& q);

}  // namespace apery
