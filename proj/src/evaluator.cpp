#include "apery/evaluator.hpp"

#include <cmath>
#include <map>

namespace apery {

namespace {

Complex i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return Complex(1);
        case 1: return Complex(Real(0), Real(1));
        case 2: return Complex(-1);
        default: return Complex(Real(0), Real(-1));
    }
}

bool singular_at_one(Prefactor p) { return p == Prefactor::f2 || p == Prefactor::f20; }

// Laurent coefficients of a prefactor at lambda^-1 and lambda^0 when x = (1 - l^2)/(1 + l^2).
std::pair<Real, Real> prefactor_laurent(Prefactor p) {
    switch (p) {
        case Prefactor::f2:
        case Prefactor::f20:
            return {Real(1) / 2, Real(0)};
        default:
            return {Real(0), Real(1)};
    }
}

struct WeightedIntegral {
    GaussianRational coeff;
    PrefactoredIntegral integral;
};

std::vector<CovTerm> cov_terms(const std::vector<WeightedIntegral>& part) {
    std::vector<CovTerm> out;
    for (const auto& wi : part)
        for (auto t : to_x_alphabet(wi.integral)) {
            t.coeff = wi.coeff * t.coeff;
            out.push_back(std::move(t));
        }
    return out;
}

HPComplex pointwise(const std::vector<CovTerm>& terms, const mpq_class& x2, int digits) {
    Precision prec(digits + 20);
    Real x = x2 == 1 ? Real(1) : sqrt(Real(x2));
    Real lambda = x2 == 1 ? Real(0) : cov_lambda(x);
    HPComplex sum(Complex(0), Real(0));
    for (const auto& t : terms) {
        if (x2 == 1 && singular_at_one(t.prefactor))
            throw EvaluationError("prefactor " + prefactor_tag(t.prefactor) + " is singular at x = 1");
        HPComplex w = march_x(t.word, lambda, digits);
        Complex k = t.coeff.to_complex() * prefactor_value(t.prefactor, x);
        sum.value += k * w.value;
        sum.err += abs(k) * w.err;
    }
    return sum;
}

HPComplex limit(const std::vector<CovTerm>& terms, int digits) {
    Precision prec(digits + 20);
    // coefficients of lambda^-1 log^j and lambda^0 log^j of the whole part
    std::vector<Complex> neg, zero;
    auto grow = [](std::vector<Complex>& v, size_t n) {
        while (v.size() < n) v.emplace_back(0);
    };
    Real scale(1);
    for (const auto& t : terms) {
        LogPowerSeries s = march_x_near_zero(t.word, digits);
        auto [pm1, p0] = prefactor_laurent(t.prefactor);
        Complex k = t.coeff.to_complex();
        grow(neg, static_cast<size_t>(s.logs()));
        grow(zero, static_cast<size_t>(s.logs()));
        for (int j = 0; j < s.logs(); ++j) {
            Complex n_coef = k * (s.at(j, 0) * pm1);
            Complex z_coef = k * (s.at(j, 0) * p0 + s.at(j, 1) * pm1);
            if (s.at(j, -1).re != 0 || s.at(j, -1).im != 0)
                throw EvaluationError("unexpected negative power in the expansion at lambda = 0");
            neg[j] += n_coef;
            zero[j] += z_coef;
            Real m = abs1(n_coef) + abs1(z_coef);
            if (m > scale) scale = m;
        }
    }
    Real residual(0);
    for (const auto& c : neg) residual += abs1(c);
    for (size_t j = 1; j < zero.size(); ++j) residual += abs1(zero[j]);
    Real tol = scale * pow(Real(10), -static_cast<long>(digits) - 5);
    if (residual > tol)
        throw EvaluationError("divergent parts do not cancel at x = 1 (residual " + residual.to_string(6) + ")");
    Real err = residual + scale * pow(Real(10), -static_cast<long>(digits) - 10);
    return HPComplex(zero.empty() ? Complex(0) : zero[0], err);
}

HPComplex evaluate_part(const std::vector<WeightedIntegral>& part, const mpq_class& x2, int digits,
                        bool& used_limit, size_t& words) {
    auto terms = cov_terms(part);
    words += terms.size();
    bool singular = false;
    if (x2 == 1)
        for (const auto& t : terms) singular = singular || singular_at_one(t.prefactor);
    if (singular) {
        used_limit = true;
        return limit(terms, digits);
    }
    return pointwise(terms, x2, digits);
}

void add_constant(HPComplex& h, const GaussianRational& c) { h.value += c.to_complex(); }

std::vector<WeightedIntegral> compile_part(const std::vector<ComboTerm>& terms, bool squared) {
    std::vector<WeightedIntegral> out;
    for (const auto& t : terms)
        out.push_back({t.coeff, squared ? compile_squared(t.spec) : compile(t.spec)});
    return out;
}

}  // namespace

HPComplex mpl_sum(const LiIndex& li, int digits) {
    const int d = static_cast<int>(li.s.size());
    if (d == 0) return HPComplex(Complex(1));
    if (li.z.size() != li.s.size()) throw std::invalid_argument("mpl_sum: index length mismatch");
    for (int s : li.s)
        if (s < 1) throw std::invalid_argument("mpl_sum: exponents must be positive");
    const bool z1_one = ((li.z[0] % 4) + 4) % 4 == 0;
    if (z1_one && li.s[0] == 1) throw std::invalid_argument("mpl_sum: " + to_string(li) + " diverges");
    Precision prec(digits + 30);

    const int logs = std::min(d - 1, 3);
    static const int per_log[] = {12, 9, 7, 6};
    const int count = (logs + 1) * per_log[logs] + 3;
    std::vector<long> ns;
    double m = 64;
    for (int i = 0; i < count; ++i, m *= 1.25) {
        long n = 4 * static_cast<long>(std::floor(m));
        if (ns.empty() || n > ns.back()) ns.push_back(n);
    }

    std::vector<Complex> acc(static_cast<size_t>(d) + 1, Complex(0));
    acc[static_cast<size_t>(d)] = Complex(1);
    std::vector<Real> re, im;
    size_t next = 0;
    for (long n = 1; next < ns.size(); ++n) {
        Real inv_n = Real(1) / Real(n);
        for (int j = 0; j < d; ++j) {
            Complex term = acc[static_cast<size_t>(j) + 1] * pow(inv_n, static_cast<long>(li.s[j]));
            int k = static_cast<int>((static_cast<long>(li.z[j]) * n) % 4);
            acc[static_cast<size_t>(j)] += term * i_power(k);
        }
        if (n == ns[next]) {
            re.push_back(acc[0].re);
            im.push_back(acc[0].im);
            ++next;
        }
    }
    TailModel model{Real(z1_one ? li.s[0] - 1 : li.s[0]), Real(1), logs};
    Extrapolation a = accelerate(ns, re, model);
    Extrapolation b = accelerate(ns, im, model);
    Real err = a.err > b.err ? a.err : b.err;
    return HPComplex(Complex(a.value, b.value), err);
}

HPComplex evaluate_prefactored(const PrefactoredIntegral& pi, const mpq_class& x2, int digits) {
    if (pi.squared && x2 != 1) throw EvaluationError("squared-binomial integrals hold at x = 1 only");
    bool used_limit = false;
    size_t words = 0;
    return evaluate_part({{GaussianRational(1), pi}}, x2, digits, used_limit, words);
}

HPComplex evaluate_bundle_limit(const SpecCombo& combo, int digits) {
    bool squared = !combo.bundle.empty() && combo.bundle.front().spec.binom_power == 2;
    auto terms = cov_terms(compile_part(combo.bundle, squared));
    HPComplex h = limit(terms, digits);
    add_constant(h, combo.bundle_constant);
    return h;
}

HPReal extrapolate_bundle(const SpecCombo& combo, int digits) {
    if (combo.bundle.empty()) return HPReal(Real(combo.bundle_constant.re()));
    Precision prec(digits + 20);
    auto part = compile_part(combo.bundle, false);
    std::vector<long> ns;
    std::vector<Real> values;
    for (int k = 8; k <= 48; k += 2) {
        mpq_class x = 1 - mpq_class(1, mpz_class(1) << k);
        mpq_class x2 = x * x;
        bool used_limit = false;
        size_t words = 0;
        HPComplex v = evaluate_part(part, x2, digits, used_limit, words);
        ns.push_back(1L << (k / 2));
        values.push_back(v.value.re);
    }
    TailModel model{Real(1), Real(1), 2};
    Extrapolation e = accelerate(ns, values, model);
    return HPReal(e.value + Real(combo.bundle_constant.re()), e.err);
}

EvalReport evaluate_series(const SeriesSpec& spec, int digits, const EvalOptions& options) {
    auto problems = validate(spec);
    if (!problems.empty()) {
        std::string msg;
        for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
        throw EvaluationError(msg);
    }
    if (spec.x2 <= 0) throw EvaluationError("the integral engine needs 0 < x^2 <= 1");
    if (spec.binom_power == 2 && spec.x2 != 1) throw EvaluationError("squared binomial is supported at x^2 = 1 only");
    const bool squared = spec.binom_power == 2;
    Precision prec(digits + 20);
    EvalReport r;

    if (options.native) {
        PrefactoredIntegral pi = squared ? compile_squared(spec, true) : compile(spec, true);
        r.main = evaluate_part({{GaussianRational(1), pi}}, spec.x2, digits, r.limit_mode, r.words);
        r.bundle = HPComplex(Complex(0));
        r.value = r.main;
        return r;
    }

    SpecCombo combo = canonicalize(spec);
    if (squared) {
        bool low = false;
        for (const auto* part : {&combo.main, &combo.bundle})
            for (const auto& t : *part) low = low || t.spec.factors[0].exp < 3;
        if (low) {
            r = evaluate_series(spec, digits, EvalOptions{true});
            r.native_fallback = true;
            return r;
        }
    }
    r.main = evaluate_part(compile_part(combo.main, squared), spec.x2, digits, r.limit_mode, r.words);
    add_constant(r.main, combo.main_constant);
    r.bundle = evaluate_part(compile_part(combo.bundle, squared), spec.x2, digits, r.limit_mode, r.words);
    add_constant(r.bundle, combo.bundle_constant);
    r.value = HPComplex(r.main.value + r.bundle.value, r.main.err + r.bundle.err);
    return r;
}

XSum expanded_words(const std::vector<ComboTerm>& terms) {
    std::vector<std::pair<GaussianRational, CompositeWord>> words;
    for (const auto& wi : compile_part(terms, false))
        for (const auto& t : cov_terms({wi})) {
            if (singular_at_one(t.prefactor))
                throw EvaluationError("prefactor " + prefactor_tag(t.prefactor) + " is singular at x = 1");
            words.emplace_back(t.coeff, t.word);
        }
    return expand_composites(words);
}

CmzvExpr lower_to_cmzv(const SeriesSpec& spec) {
    if (spec.binom_power != 1 || spec.x2 != 1)
        throw EvaluationError("CMZV lowering needs binomial power 1 at x^2 = 1");
    SpecCombo combo = canonicalize(spec);
    CmzvExpr out;
    out.constant = combo.main_constant;
    if (combo.bundle.empty())
        out.constant += combo.bundle_constant;
    else
        out.complete = false;

    RegPolynomial total;
    for (const auto& [w, c] : expanded_words(combo.main)) {
        RegPolynomial p = reg_decompose(w);
        for (auto& [key, sum] : p.coeffs) total.coeffs[key] += c * sum;
    }
    std::map<LiIndex, GaussianRational> lis;
    for (const auto& [key, sum] : total.coeffs) {
        if (sum.empty()) continue;
        if (key != std::pair{0, 0}) {
            out.max_reg_degree = std::max(out.max_reg_degree, key.first + key.second);
            out.complete = false;
            continue;
        }
        for (const auto& [w, c] : sum) {
            if (w.empty()) {
                out.constant += c;
                continue;
            }
            lis[word_to_li(w)] += c;
        }
    }
    for (const auto& [li, c] : lis)
        if (!c.is_zero()) out.terms.push_back({c, li});
    return out;
}

HPComplex evaluate_cmzv(const CmzvExpr& expr, int digits) {
    Precision prec(digits + 20);
    HPComplex sum(expr.constant.to_complex(), Real(0));
    for (const auto& t : expr.terms) {
        HPComplex v = march_x(li_to_word(t.li), Real(0), digits);
        Complex k = t.coeff.to_complex();
        sum.value += k * v.value;
        sum.err += abs(k) * v.err;
    }
    return sum;
}

}  // namespace apery
