#include "apery/cov.hpp"

namespace apery {

namespace {

XComposite mono(XSym s, GaussianRational c = 1) { return XComposite::monomial(s, std::move(c)); }

}  // namespace

XComposite omega_image(Omega w) {
    const GaussianRational i = GaussianRational::i();
    const GaussianRational m1(-1);
    switch (w) {
        case Omega::w0:  // y~
            return mono(XSym::xmi) + mono(XSym::xpi) + mono(XSym::xm1, m1) + mono(XSym::xp1, m1);
        case Omega::w1:  // i (x_{-i} - x_i)
            return mono(XSym::xmi, i) + mono(XSym::xpi, -i);
        case Omega::w2:  // z~
            return mono(XSym::a, m1) + mono(XSym::xmi, m1) + mono(XSym::xpi, m1);
        case Omega::w3:
            return mono(XSym::xm1) + mono(XSym::xp1, m1);
        case Omega::w8:
            return mono(XSym::a, m1);
        case Omega::w20:
            return mono(XSym::a, m1) + mono(XSym::xm1, m1) + mono(XSym::xp1, m1);
        case Omega::w5:
            return mono(XSym::qpi) + mono(XSym::qmi);
        case Omega::wdt:
            return mono(XSym::qpi, i) + mono(XSym::qmi, -i);
    }
    return {};
}

CompositeWord omega_to_x(const OmegaWord& w, int& sign) {
    auto [s, rev] = reverse_with_sign(w);
    sign = s;
    CompositeWord out;
    out.reserve(rev.size());
    for (Omega l : rev) out.push_back(omega_image(l));
    return out;
}

std::vector<CovTerm> to_x_alphabet(const PrefactoredIntegral& pi) {
    std::vector<CovTerm> out;
    for (const auto& t : pi.terms) {
        int sign = 1;
        CompositeWord w = omega_to_x(t.word, sign);
        out.push_back({t.coeff * GaussianRational(sign), t.prefactor, std::move(w)});
    }
    return out;
}

Real cov_lambda(const Real& x) { return sqrt((Real(1) - x) / (Real(1) + x)); }

Real omega_density(Omega w, const Real& t) {
    const Real one(1);
    const Real c = sqrt(one - t * t);  // cos(theta) for t = sin(theta)
    switch (w) {
        case Omega::w0: return one / t;
        case Omega::w1: return one / c;
        case Omega::w2: return t / (one - t * t);
        case Omega::w3: return one / (t * c);
        case Omega::w5: return t / c;
        case Omega::w8: return one / (one - t * t);
        case Omega::w20: return one / (t * (one - t * t));
        case Omega::wdt: return one;
    }
    return Real(0);
}

Complex x_density(const XComposite& letter, const Real& u) {
    const Complex i(Real(0), Real(1));
    Complex sum(0);
    for (int k = 0; k < kXSymCount; ++k) {
        const auto& c = letter.coeff[k];
        if (c.is_zero()) continue;
        Complex v;
        switch (static_cast<XSym>(k)) {
            case XSym::a: v = Complex(Real(1) / u); break;
            case XSym::xp1: v = Complex(Real(1) / (Real(1) - u)); break;
            case XSym::xm1: v = Complex(Real(1) / (Real(-1) - u)); break;
            case XSym::xpi: v = Complex(1) / (i - Complex(u)); break;
            case XSym::xmi: v = Complex(1) / (-i - Complex(u)); break;
            case XSym::qpi: v = Complex(1) / ((i - Complex(u)) * (i - Complex(u))); break;
            case XSym::qmi: v = Complex(1) / ((-i - Complex(u)) * (-i - Complex(u))); break;
        }
        sum += c.to_complex() * v;
    }
    return sum;
}

Real omega_pullback(Omega w, const Real& u) {
    const Real one(1);
    const Real q = one + u * u;
    const Real t = (one - u * u) / q;
    const Real dt = Real(-4) * u / (q * q);
    return omega_density(w, t) * dt;
}

AdmissibilityReport admissible_check(const XSum& words) {
    AdmissibilityReport r;
    for (const auto& [w, c] : words) {
        if (!is_admissible(w)) {
            r.ok = false;
            r.offending.push_back(w);
        }
    }
    return r;
}

std::string to_string(const CovTerm& t) {
    return "(" + t.coeff.to_string() + ") [" + prefactor_tag(t.prefactor) + "] " + to_string(t.word) +
           " on [lambda, 1]";
}

}  // namespace apery
