#pragma once

// Words of 1-forms with exact coefficients: the omega alphabet on [0, x] and the
// x alphabet du/u, du/(xi - u), du/(xi - u)^2 on [lambda, 1].

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "apery/gaussian.hpp"

namespace apery {

/// w0 = dt/t, w1 = dt/sqrt(1-t^2), w2 = t dt/(1-t^2), w3 = dt/(t sqrt(1-t^2)),
/// w5 = t dt/sqrt(1-t^2), w8 = dt/(1-t^2), w20 = dt/(t(1-t^2)), wdt = dt.
enum class Omega : std::uint8_t { w0, w1, w2, w3, w5, w8, w20, wdt };
using OmegaWord = std::vector<Omega>;

/// a = du/u, x+1 = du/(1-u), x-1 = du/(-1-u), x+i, x-i likewise, q+i = du/(i-u)^2, q-i = du/(-i-u)^2.
enum class XSym : std::uint8_t { a, xp1, xm1, xpi, xmi, qpi, qmi };
constexpr int kXSymCount = 7;
using XWord = std::vector<XSym>;

std::string omega_tag(Omega w);
std::string xsym_tag(XSym x);
/// Space-separated tags, e.g. "w0 w3 w1" or "a x+1 x-i"; "1" for the empty word.
std::string to_string(const OmegaWord& w);
std::string to_string(const XWord& w);
OmegaWord parse_omega_word(const std::string& text);
XWord parse_x_word(const std::string& text);

/// A linear combination of the monomial x letters.
struct XComposite {
    std::array<GaussianRational, kXSymCount> coeff;

    static XComposite monomial(XSym s, GaussianRational c = 1);
    XComposite& operator+=(const XComposite& o);
    friend XComposite operator+(XComposite a, const XComposite& b) { return a += b; }
    friend XComposite operator*(const GaussianRational& k, XComposite a);
    friend bool operator==(const XComposite&, const XComposite&) = default;
    bool is_monomial() const;
    std::string to_string() const;
};
using CompositeWord = std::vector<XComposite>;
std::string to_string(const CompositeWord& w);

template <class Letter>
class WordSum {
public:
    using Word = std::vector<Letter>;
    using Map = std::map<Word, GaussianRational>;

    WordSum() = default;
    explicit WordSum(Word w, GaussianRational c = 1) { add(std::move(w), c); }

    void add(const Word& w, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    WordSum& operator+=(const WordSum& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    WordSum& operator-=(const WordSum& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    WordSum& operator*=(const GaussianRational& k) {
        if (k.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= k;
        return *this;
    }
    friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
    friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }
    friend WordSum operator*(const GaussianRational& k, WordSum a) { return a *= k; }
    friend bool operator==(const WordSum& a, const WordSum& b) { return a.terms_ == b.terms_; }

    GaussianRational coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? GaussianRational(0) : it->second;
    }
    const Map& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

private:
    Map terms_;
};

using OmegaSum = WordSum<Omega>;
using XSum = WordSum<XSym>;

/// All interleavings of u and v that keep the internal orders, with multiplicity.
template <class Letter>
WordSum<Letter> shuffle(const std::vector<Letter>& u, const std::vector<Letter>& v) {
    // table[i][j] = shuffles of u[i:] and v[j:]
    const size_t m = u.size(), n = v.size();
    std::vector<std::vector<WordSum<Letter>>> table(m + 1, std::vector<WordSum<Letter>>(n + 1));
    for (size_t i = m + 1; i-- > 0;) {
        for (size_t j = n + 1; j-- > 0;) {
            if (i == m && j == n) {
                table[i][j] = WordSum<Letter>(std::vector<Letter>{});
                continue;
            }
            WordSum<Letter> acc;
            auto prepend = [&acc](Letter l, const WordSum<Letter>& tail) {
                for (const auto& [w, c] : tail) {
                    std::vector<Letter> nw;
                    nw.reserve(w.size() + 1);
                    nw.push_back(l);
                    nw.insert(nw.end(), w.begin(), w.end());
                    acc.add(nw, c);
                }
            };
            if (i < m) prepend(u[i], table[i + 1][j]);
            if (j < n) prepend(v[j], table[i][j + 1]);
            table[i][j] = std::move(acc);
        }
    }
    return table[0][0];
}

template <class Letter>
WordSum<Letter> shuffle(const WordSum<Letter>& a, const WordSum<Letter>& b) {
    WordSum<Letter> out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) out += (cu * cv) * shuffle(u, v);
    return out;
}

/// (-1)^|w| and the reversed word.
template <class Letter>
std::pair<int, std::vector<Letter>> reverse_with_sign(const std::vector<Letter>& w) {
    return {w.size() % 2 ? -1 : 1, std::vector<Letter>(w.rbegin(), w.rend())};
}

/// Multilinear expansion of composite words into monomial words.
XSum expand_composites(const std::vector<std::pair<GaussianRational, CompositeWord>>& words);

/// First letter is not x+1 and last letter is not a (the empty word counts as admissible).
bool is_admissible(const XWord& w);

/// w = sum_{p,q} (T1^p T0^q) coefficient words, where T1 stands for the shuffle
/// power of x+1 and T0 for that of a, and every coefficient word is admissible.
struct RegPolynomial {
    std::map<std::pair<int, int>, XSum> coeffs;  // key (p, q) for T1^p T0^q
    int degree() const;
};
RegPolynomial reg_decompose(const XWord& w);
/// Expands T1 -> x+1 and T0 -> a through shuffles; inverse of reg_decompose.
XSum reg_expand(const RegPolynomial& poly);

/// Li_{s}(z) = sum_{n_1 > ... > n_d > 0} prod z_j^{n_j} / n_j^{s_j} with z_j = i^{z[j]}.
struct LiIndex {
    std::vector<int> s;
    std::vector<int> z;  // exponents mod 4
    int weight() const;
    friend bool operator==(const LiIndex&, const LiIndex&) = default;
    friend auto operator<=>(const LiIndex&, const LiIndex&) = default;
};
std::string to_string(const LiIndex& li);

/// Reads a^{s1-1} x_{xi1} ... a^{sd-1} x_{xid} as Li_s(z) with z1 = 1/xi1, zj = xi_{j-1}/xi_j.
/// Throws std::invalid_argument on inadmissible words or q letters.
LiIndex word_to_li(const XWord& w);
XWord li_to_word(const LiIndex& li);

}  // namespace apery
