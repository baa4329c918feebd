#include <doctest.h>

#include <random>

#include "apery/words.hpp"

using namespace apery;

namespace {

const XSym kLetters[] = {XSym::a, XSym::xp1, XSym::xm1, XSym::xpi, XSym::xmi};

std::vector<XWord> all_words(int max_len) {
    std::vector<XWord> out{{}};
    std::vector<XWord> layer{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<XWord> next;
        for (const auto& w : layer)
            for (XSym l : kLetters) {
                XWord nw = w;
                nw.push_back(l);
                next.push_back(nw);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

GaussianRational total(const XSum& s) {
    GaussianRational t;
    for (const auto& [w, c] : s) t += c;
    return t;
}

}  // namespace

TEST_CASE("tags parse back") {
    XWord w{XSym::a, XSym::xp1, XSym::xm1, XSym::xpi, XSym::xmi, XSym::qpi, XSym::qmi};
    CHECK(parse_x_word(to_string(w)) == w);
    OmegaWord o{Omega::w0, Omega::w1, Omega::w2, Omega::w3, Omega::w5, Omega::w8, Omega::w20, Omega::wdt};
    CHECK(parse_omega_word(to_string(o)) == o);
    CHECK(to_string(XWord{}) == "1");
    CHECK_THROWS(parse_x_word("a x+2"));
}

TEST_CASE("shuffle counts interleavings") {
    XWord aa{XSym::a, XSym::a};
    CHECK(shuffle(XWord{XSym::a}, XWord{XSym::a}) == XSum(aa, 2));
    std::mt19937 rng(7);
    auto words = all_words(3);
    std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        const XWord& u = words[pick(rng)];
        const XWord& v = words[pick(rng)];
        XSum s = shuffle(u, v);
        CHECK(total(s) == GaussianRational(mpq_class(binomial(u.size() + v.size(), u.size()))));
        for (const auto& [w, c] : s) CHECK(w.size() == u.size() + v.size());
        CHECK(s == shuffle(v, u));
    }
    XWord u{XSym::a, XSym::xp1}, v{XSym::xm1};
    XSum s = shuffle(u, v);
    CHECK(s.size() == 3);
    CHECK(s.coeff({XSym::xm1, XSym::a, XSym::xp1}) == GaussianRational(1));
    CHECK(s.coeff({XSym::a, XSym::xm1, XSym::xp1}) == GaussianRational(1));
    CHECK(s.coeff({XSym::a, XSym::xp1, XSym::xm1}) == GaussianRational(1));
}

TEST_CASE("reversal") {
    OmegaWord w{Omega::w0, Omega::w1, Omega::w8};
    auto [sign, r] = reverse_with_sign(w);
    CHECK(sign == -1);
    CHECK(r == OmegaWord{Omega::w8, Omega::w1, Omega::w0});
    CHECK(reverse_with_sign(OmegaWord{Omega::w0, Omega::w1}).first == 1);
}

TEST_CASE("composite words expand multilinearly") {
    XComposite sum = XComposite::monomial(XSym::xp1) + XComposite::monomial(XSym::xm1, GaussianRational(-2));
    CHECK_FALSE(sum.is_monomial());
    CompositeWord w{XComposite::monomial(XSym::a), sum, sum};
    XSum e = expand_composites({{GaussianRational(3), w}});
    CHECK(e.size() == 4);
    CHECK(e.coeff({XSym::a, XSym::xp1, XSym::xp1}) == GaussianRational(3));
    CHECK(e.coeff({XSym::a, XSym::xp1, XSym::xm1}) == GaussianRational(-6));
    CHECK(e.coeff({XSym::a, XSym::xm1, XSym::xm1}) == GaussianRational(12));
}

TEST_CASE("admissibility") {
    CHECK(is_admissible({}));
    CHECK(is_admissible({XSym::a, XSym::xp1}));
    CHECK(is_admissible({XSym::xm1}));
    CHECK_FALSE(is_admissible({XSym::xp1}));
    CHECK_FALSE(is_admissible({XSym::xm1, XSym::a}));
}

TEST_CASE("regularization") {
    RegPolynomial one = reg_decompose({XSym::xp1});
    CHECK(one.degree() == 1);
    CHECK(one.coeffs.at({1, 0}) == XSum(XWord{}));
    RegPolynomial zero = reg_decompose({XSym::a});
    CHECK(zero.coeffs.at({0, 1}) == XSum(XWord{}));
    // x+1 a = x+1 * a - a x+1
    RegPolynomial mixed = reg_decompose({XSym::xp1, XSym::a});
    CHECK(mixed.coeffs.at({0, 0}) == XSum(XWord{XSym::a, XSym::xp1}, GaussianRational(-1)));
    CHECK(reg_decompose({XSym::a, XSym::xm1}).degree() == 0);

    for (const auto& w : all_words(4)) {
        RegPolynomial p = reg_decompose(w);
        CHECK(reg_expand(p) == XSum(w));
        for (const auto& [key, sum] : p.coeffs)
            for (const auto& [cw, c] : sum) CHECK(is_admissible(cw));
    }
}

TEST_CASE("words read as Li indices") {
    CHECK_THROWS_AS(word_to_li({XSym::xp1}), std::invalid_argument);
    CHECK(word_to_li({XSym::a, XSym::xp1}) == LiIndex{{2}, {0}});
    CHECK(word_to_li({XSym::a, XSym::xm1}) == LiIndex{{2}, {2}});
    CHECK(word_to_li({XSym::xpi}) == LiIndex{{1}, {3}});
    CHECK(word_to_li({XSym::xmi}) == LiIndex{{1}, {1}});
    // z2 = xi1 / xi2 = i / 1
    CHECK(word_to_li({XSym::a, XSym::xpi, XSym::xp1}) == LiIndex{{2, 1}, {3, 1}});
    CHECK(word_to_li({XSym::a, XSym::xpi, XSym::xp1}).weight() == 3);
    CHECK_THROWS_AS(word_to_li({XSym::xp1, XSym::a}), std::invalid_argument);
    CHECK_THROWS_AS(word_to_li({XSym::a, XSym::qpi}), std::invalid_argument);
    for (const auto& w : all_words(4))
        if (!w.empty() && is_admissible(w)) CHECK(li_to_word(word_to_li(w)) == w);
}
