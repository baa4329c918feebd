#include "apery/gaussian.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace apery {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    canonicalize();
}

void GaussianRational::canonicalize() {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}
GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}
GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    return *this;
}
GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    mpq_class d = o.re_ * o.re_ + o.im_ * o.im_;
    if (sgn(d) == 0) throw std::domain_error("division by zero Gaussian rational");
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / d;
    im_ = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = r;
    return *this;
}

GaussianRational GaussianRational::pow(int n) const {
    GaussianRational base = n < 0 ? GaussianRational(1) / *this : *this;
    GaussianRational out(1);
    for (int k = n < 0 ? -n : n; k > 0; k >>= 1) {
        if (k & 1) out *= base;
        base *= base;
    }
    return out;
}

Complex GaussianRational::to_complex() const { return {Real(re_), Real(im_)}; }

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

std::string GaussianRational::to_string() const {
    if (sgn(im_) == 0) return rational_to_string(re_);
    std::string ims;
    if (im_ == 1) {
        ims = "i";
    } else if (im_ == -1) {
        ims = "-i";
    } else {
        ims = rational_to_string(im_) + "i";
    }
    if (sgn(re_) == 0) return ims;
    return rational_to_string(re_) + (sgn(im_) > 0 ? "+" : "") + ims;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.to_string(); }

mpq_class parse_rational(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        if (text.find('/') != std::string::npos) throw std::invalid_argument("bad rational: " + raw);
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac = text.size() - dot - 1;
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
        mpz_class num;
        if (num.set_str(digits == "-" || digits.empty() ? "0" : digits, 10) != 0)
            throw std::invalid_argument("bad rational: " + raw);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + raw);
    auto slash = text.find('/');
    if (slash != std::string::npos && mpz_class(text.substr(slash + 1)) == 0)
        throw std::invalid_argument("zero denominator: " + raw);
    q.canonicalize();
    return q;
}

GaussianRational GaussianRational::parse(const std::string& raw) {
    std::string t;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') t += c;
    if (t.empty()) throw std::invalid_argument("empty Gaussian rational");
    if (t.back() != 'i') return {parse_rational(t), 0};
    t.pop_back();
    // split at the last sign that is not the leading character
    size_t split = std::string::npos;
    for (size_t k = t.size(); k-- > 1;) {
        if (t[k] == '+' || t[k] == '-') {
            split = k;
            break;
        }
    }
    auto im_of = [&](std::string s) -> mpq_class {
        if (s.empty() || s == "+") return 1;
        if (s == "-") return -1;
        if (s[0] == '+') s.erase(0, 1);
        return parse_rational(s);
    };
    if (split == std::string::npos) return {0, im_of(t)};
    return {parse_rational(t.substr(0, split)), im_of(t.substr(split))};
}

}  // namespace apery
