#include "apery/properties.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "apery/compiler.hpp"
#include "apery/cov.hpp"
#include "apery/evaluator.hpp"
#include "apery/golden.hpp"
#include "apery/march.hpp"
#include "apery/normalizer.hpp"

namespace apery {

namespace {

constexpr int kDigits = 30;

class Timer {
public:
    explicit Timer(PropertyResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
    ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

private:
    PropertyResult& r_;
    std::chrono::steady_clock::time_point start_;
};

PropertyResult named(std::string name) {
    PropertyResult r;
    r.name = std::move(name);
    r.pass = true;
    return r;
}

void fail(PropertyResult& r, const std::string& what) {
    if (r.pass) r.detail = what;
    r.pass = false;
}

// x words over a, x+1, x-1, x+i, x-i
XWord random_x_word(std::mt19937_64& rng, int min_len, int max_len) {
    std::uniform_int_distribution<int> len_d(min_len, max_len), letter_d(0, 4);
    XWord w(static_cast<size_t>(len_d(rng)));
    for (auto& l : w) l = static_cast<XSym>(letter_d(rng));
    return w;
}

XWord random_admissible(std::mt19937_64& rng, int max_len) {
    while (true) {
        XWord w = random_x_word(rng, 1, max_len);
        if (is_admissible(w)) return w;
    }
}

OmegaWord random_omega_word(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len_d(0, max_len), letter_d(0, 7);
    OmegaWord w(static_cast<size_t>(len_d(rng)));
    for (auto& l : w) l = static_cast<Omega>(letter_d(rng));
    return w;
}

Real tolerance(int exponent) { return pow(Real(10), static_cast<long>(exponent)); }

std::string dsl_of(const SeriesSpec& s) { return to_dsl(s); }

std::vector<SeriesSpec> canonical_pieces(const SeriesSpec& s) {
    SpecCombo c = canonicalize(s);
    std::vector<SeriesSpec> out;
    for (const auto* part : {&c.main, &c.bundle})
        for (const auto& t : *part) out.push_back(t.spec);
    return out;
}

}  // namespace

SeriesSpec random_spec(std::mt19937_64& rng, const mpq_class& x2, int max_depth, int max_weight) {
    std::uniform_int_distribution<int> depth_d(1, max_depth), form_d(0, 3), junction_d(0, 1);
    while (true) {
        SeriesSpec s;
        s.x2 = x2;
        int d = std::min(depth_d(rng), max_weight);
        int budget = max_weight;
        for (int j = 0; j < d; ++j) {
            int left = budget - (d - j - 1);
            std::uniform_int_distribution<int> exp_d(1, std::min(3, left));
            int e = exp_d(rng);
            budget -= e;
            s.factors.push_back({static_cast<Form>(form_d(rng)), e});
            s.junctions.push_back(junction_d(rng) ? Junction::Strict : Junction::Weak);
        }
        if (validate(s).empty()) return s;
    }
}

std::vector<XWord> corpus_words(int max_weight) {
    std::set<XWord> words;
    for (const auto& g : golden_cases()) {
        if (g.binom_power != 1 || g.x2 != "1") continue;
        SpecCombo c = canonicalize(g.spec());
        for (const auto& [w, coeff] : expanded_words(c.main))
            if (static_cast<int>(w.size()) <= max_weight) words.insert(w);
    }
    return {words.begin(), words.end()};
}

PropertyResult check_shuffle_algebra(std::uint64_t seed) {
    PropertyResult r = named("shuffle commutative and associative");
    Timer timer(r);
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 100; ++trial) {
        XWord u = random_x_word(rng, 0, 4), v = random_x_word(rng, 0, 4), w = random_x_word(rng, 0, 4);
        ++r.cases;
        if (!(shuffle(u, v) == shuffle(v, u))) fail(r, "u*v != v*u for " + to_string(u) + " / " + to_string(v));
        XSum left = shuffle(shuffle(u, v), XSum(w));
        XSum right = shuffle(XSum(u), shuffle(v, w));
        if (!(left == right)) fail(r, "associativity fails for " + to_string(u) + " / " + to_string(v) + " / " + to_string(w));
    }
    return r;
}

PropertyResult check_shuffle_homomorphism(std::uint64_t seed) {
    PropertyResult r = named("shuffle homomorphism of the integral");
    Timer timer(r);
    std::mt19937_64 rng(seed + 1);
    Precision prec(kDigits + 10);
    Real worst(0);
    for (int trial = 0; trial < 20; ++trial) {
        XWord u = random_admissible(rng, 3), v = random_admissible(rng, 3);
        ++r.cases;
        Complex lhs = march_x(u, Real(0), kDigits).value * march_x(v, Real(0), kDigits).value;
        Complex rhs(0);
        for (const auto& [w, c] : shuffle(u, v)) rhs += c.to_complex() * march_x(w, Real(0), kDigits).value;
        Real d = abs(lhs - rhs);
        if (d > worst) worst = d;
        if (d > tolerance(-15)) fail(r, to_string(u) + " x " + to_string(v) + " off by " + d.to_string(3));
    }
    if (r.pass) r.detail = "max deviation " + worst.to_string(3);
    return r;
}

PropertyResult check_reg_roundtrip(std::uint64_t seed) {
    PropertyResult r = named("regularization round trip");
    Timer timer(r);
    std::mt19937_64 rng(seed + 2);
    for (int trial = 0; trial < 200; ++trial) {
        XWord w = random_x_word(rng, 0, 5);
        ++r.cases;
        RegPolynomial p = reg_decompose(w);
        if (!(reg_expand(p) == XSum(w))) fail(r, "round trip fails for " + to_string(w));
        for (const auto& [key, sum] : p.coeffs)
            for (const auto& [cw, c] : sum)
                if (!is_admissible(cw)) fail(r, "inadmissible coefficient word in the decomposition of " + to_string(w));
    }
    return r;
}

PropertyResult check_reversal(std::uint64_t seed) {
    PropertyResult r = named("reversal involution with sign");
    Timer timer(r);
    std::mt19937_64 rng(seed + 3);
    for (int trial = 0; trial < 200; ++trial) {
        OmegaWord w = random_omega_word(rng, 6);
        ++r.cases;
        auto [s1, once] = reverse_with_sign(w);
        auto [s2, twice] = reverse_with_sign(once);
        if (twice != w || s1 * s2 != 1) fail(r, "reversal is not an involution on " + to_string(w));
        if (s1 != ((w.size() % 2) ? -1 : 1)) fail(r, "sign is not (-1)^m on " + to_string(w));
    }
    return r;
}

PropertyResult check_letter_pullbacks() {
    PropertyResult r = named("letter images are pull-backs");
    Timer timer(r);
    Precision prec(kDigits + 10);
    for (int k = 0; k < 8; ++k) {
        Omega w = static_cast<Omega>(k);
        for (const char* u : {"0.2", "0.5"}) {
            ++r.cases;
            Real uu(u);
            Complex image = x_density(omega_image(w), uu);
            Real d = abs(image - Complex(omega_pullback(w, uu)));
            if (d > tolerance(-kDigits)) fail(r, "image of " + omega_tag(w) + " differs at u = " + u);
        }
    }
    return r;
}

PropertyResult check_prefactor_identity() {
    PropertyResult r = named("prefactor times w1 equals the letter");
    Timer timer(r);
    Precision prec(kDigits + 10);
    const std::pair<Prefactor, Omega> pairs[] = {
        {Prefactor::f1, Omega::w1}, {Prefactor::f2, Omega::w2}, {Prefactor::f3, Omega::w3},
        {Prefactor::f5, Omega::w5}, {Prefactor::f20, Omega::w20}};
    for (const auto& [f, w] : pairs)
        for (const char* t : {"0.25", "0.5", "0.75"}) {
            ++r.cases;
            Real tt(t);
            Real d = abs(prefactor_value(f, tt) * omega_density(Omega::w1, tt) - omega_density(w, tt));
            if (d > tolerance(-kDigits)) fail(r, prefactor_tag(f) + " fails at t = " + t);
        }
    return r;
}

PropertyResult check_cov_numeric(std::uint64_t seed) {
    PropertyResult r = named("change of variables numeric identity");
    Timer timer(r);
    std::mt19937_64 rng(seed + 4);
    Precision prec(kDigits + 10);
    std::set<std::pair<OmegaWord, bool>> words;  // word, usable at x = 1
    int guard = 0;
    while (words.size() < 30 && guard++ < 1000) {
        SeriesSpec s = random_spec(rng, mpq_class(1, 4), 3, 5);
        for (const auto& piece : canonical_pieces(s)) {
            for (const auto& t : compile(piece).terms) {
                if (t.word.size() > 5 || words.size() >= 30) continue;
                bool at_one = !(t.prefactor == Prefactor::f2 || t.prefactor == Prefactor::f20);
                words.insert({t.word, at_one});
            }
        }
    }
    Real worst(0);
    for (const auto& [w, at_one] : words) {
        int sign = 1;
        CompositeWord xw = omega_to_x(w, sign);
        for (const char* x : {"0.3", "0.7", "1"}) {
            Real xx(x);
            if (xx == Real(1) && !at_one) continue;
            ++r.cases;
            Complex theta = march_omega(w, xx, kDigits).value;
            Complex xside = march_x(xw, xx == Real(1) ? Real(0) : cov_lambda(xx), kDigits).value * Real(sign);
            Real d = abs(theta - xside);
            if (d > worst) worst = d;
            if (d > tolerance(-12)) fail(r, to_string(w) + " at x = " + x + " off by " + d.to_string(3));
        }
    }
    if (r.pass) r.detail = std::to_string(words.size()) + " words, max deviation " + worst.to_string(3);
    return r;
}

PropertyResult check_compile_bookkeeping(std::uint64_t seed) {
    PropertyResult r = named("word length and w1 parity of compiled words");
    Timer timer(r);
    std::mt19937_64 rng(seed + 5);
    for (int trial = 0; trial < 200; ++trial) {
        const bool squared = trial % 4 == 3;
        SeriesSpec s = random_spec(rng, squared ? mpq_class(1) : mpq_class(1, 4), 3, 6);
        if (squared) {
            s.binom_power = 2;
            if (!validate(s).empty()) {
                s.factors[0].exp = std::max(s.factors[0].exp, 3);
                if (!validate(s).empty()) continue;
            }
        }
        ++r.cases;
        for (const auto& piece : canonical_pieces(s)) {
            if (squared && piece.factors[0].exp < 3) continue;
            PrefactoredIntegral pi = squared ? compile_squared(piece) : compile(piece);
            const int weight = piece.weight();
            const Form head = piece.factors[0].form;
            for (const auto& t : pi.terms) {
                const int len = static_cast<int>(t.word.size());
                int extra = len - weight;
                int max_extra = head == Form::OMinus ? (squared ? 2 : 1) : 0;
                if (extra < 0 || extra > max_extra)
                    fail(r, dsl_of(piece) + ": word " + to_string(t.word) + " has length " + std::to_string(len));
                for (Omega l : t.word)
                    if (l == Omega::w5 || l == Omega::wdt) fail(r, dsl_of(piece) + ": canonical word contains w5/wdt");
                if (!squared && head != Form::OMinus && piece.factors[0].exp >= 2) {
                    int ones = 0;
                    for (Omega l : t.word) ones += l == Omega::w1;
                    bool odd = ones % 2 == 1;
                    if (odd != (head == Form::OPlus))
                        fail(r, dsl_of(piece) + ": w1 count " + std::to_string(ones) + " in " + to_string(t.word));
                }
            }
        }
    }
    return r;
}

PropertyResult check_engine_agreement() {
    PropertyResult r = named("nested sums agree with the march on corpus words");
    Timer timer(r);
    Precision prec(kDigits + 10);
    Real worst(0);
    for (const auto& w : corpus_words(4)) {
        ++r.cases;
        LiIndex li = word_to_li(w);
        Complex a = mpl_sum(li, 15).value;
        Complex b = march_x(w, Real(0), kDigits).value;
        Real d = abs(a - b);
        if (d > worst) worst = d;
        if (d > tolerance(-12)) fail(r, to_string(li) + " off by " + d.to_string(3));
    }
    if (r.pass) r.detail = "max deviation " + worst.to_string(3);
    return r;
}

PropertyResult check_corpus_admissible() {
    PropertyResult r = named("canonical monomials admissible, T coefficients vanish");
    Timer timer(r);
    for (const auto& g : golden_cases()) {
        if (g.binom_power != 1 || g.x2 != "1") continue;
        SpecCombo c = canonicalize(g.spec());
        for (const auto& [w, coeff] : expanded_words(c.main)) {
            ++r.cases;
            if (!is_admissible(w)) fail(r, g.id + ": inadmissible " + to_string(w));
        }
        CmzvExpr e = lower_to_cmzv(g.spec());
        if (e.max_reg_degree != 0) fail(r, g.id + ": nonzero T coefficient");
    }
    return r;
}

std::vector<PropertyResult> run_properties(std::uint64_t seed) {
    return {check_shuffle_algebra(seed),      check_shuffle_homomorphism(seed), check_reg_roundtrip(seed),
            check_reversal(seed),             check_letter_pullbacks(),         check_prefactor_identity(),
            check_cov_numeric(seed),          check_compile_bookkeeping(seed),  check_engine_agreement(),
            check_corpus_admissible()};
}

}  // namespace apery
