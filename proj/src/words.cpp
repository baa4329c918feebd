#include "apery/words.hpp"

#include <sstream>
#include <stdexcept>

namespace apery {

namespace {

const char* const kOmegaTags[] = {"w0", "w1", "w2", "w3", "w5", "w8", "w20", "wdt"};
const char* const kXTags[] = {"a", "x+1", "x-1", "x+i", "x-i", "q+i", "q-i"};

std::vector<std::string> split_ws(const std::string& text) {
    std::istringstream is(text);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// xi = i^k for the x letters
int root_exponent(XSym s) {
    switch (s) {
        case XSym::xp1: return 0;
        case XSym::xpi: return 1;
        case XSym::xm1: return 2;
        case XSym::xmi: return 3;
        default: throw std::invalid_argument("not an x_xi letter: " + xsym_tag(s));
    }
}

XSym root_letter(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return XSym::xp1;
        case 1: return XSym::xpi;
        case 2: return XSym::xm1;
        default: return XSym::xmi;
    }
}

}  // namespace

std::string omega_tag(Omega w) { return kOmegaTags[static_cast<int>(w)]; }
std::string xsym_tag(XSym x) { return kXTags[static_cast<int>(x)]; }

std::string to_string(const OmegaWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + omega_tag(w[k]);
    return s;
}

std::string to_string(const XWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + xsym_tag(w[k]);
    return s;
}

OmegaWord parse_omega_word(const std::string& text) {
    OmegaWord w;
    for (const auto& tok : split_ws(text)) {
        if (tok == "1" || tok == "|") continue;
        bool found = false;
        for (int k = 0; k < 8; ++k)
            if (tok == kOmegaTags[k]) {
                w.push_back(static_cast<Omega>(k));
                found = true;
            }
        if (!found) throw std::invalid_argument("unknown omega letter '" + tok + "'");
    }
    return w;
}

XWord parse_x_word(const std::string& text) {
    XWord w;
    for (const auto& tok : split_ws(text)) {
        if (tok == "1") continue;
        bool found = false;
        for (int k = 0; k < kXSymCount; ++k)
            if (tok == kXTags[k]) {
                w.push_back(static_cast<XSym>(k));
                found = true;
            }
        if (!found) throw std::invalid_argument("unknown x letter '" + tok + "'");
    }
    return w;
}

XComposite XComposite::monomial(XSym s, GaussianRational c) {
    XComposite x;
    x.coeff[static_cast<int>(s)] = std::move(c);
    return x;
}

XComposite& XComposite::operator+=(const XComposite& o) {
    for (int k = 0; k < kXSymCount; ++k) coeff[k] += o.coeff[k];
    return *this;
}

XComposite operator*(const GaussianRational& k, XComposite a) {
    for (auto& c : a.coeff) c *= k;
    return a;
}

bool XComposite::is_monomial() const {
    int nonzero = 0;
    for (const auto& c : coeff)
        if (!c.is_zero()) ++nonzero;
    return nonzero == 1;
}

std::string XComposite::to_string() const {
    std::string s;
    for (int k = 0; k < kXSymCount; ++k) {
        const auto& c = coeff[k];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        std::string term;
        if (cs == "1") term = kXTags[k];
        else if (cs == "-1") term = std::string("-") + kXTags[k];
        else if (c.is_real() || sgn(c.re()) == 0) term = cs + "*" + kXTags[k];
        else term = "(" + cs + ")*" + kXTags[k];
        if (!s.empty() && term[0] != '-') s += "+";
        s += term;
    }
    if (s.empty()) return "0";
    for (int k = 0; k < kXSymCount; ++k)
        if (is_monomial() && coeff[k] == GaussianRational(1)) return s;
    return "(" + s + ")";
}

std::string to_string(const CompositeWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + w[k].to_string();
    return s;
}

XSum expand_composites(const std::vector<std::pair<GaussianRational, CompositeWord>>& words) {
    XSum out;
    for (const auto& [coeff, word] : words) {
        // partial products, letter by letter
        std::vector<std::pair<XWord, GaussianRational>> acc{{XWord{}, coeff}};
        for (const auto& letter : word) {
            std::vector<std::pair<XWord, GaussianRational>> next;
            next.reserve(acc.size() * 4);
            for (const auto& [w, c] : acc) {
                for (int k = 0; k < kXSymCount; ++k) {
                    if (letter.coeff[k].is_zero()) continue;
                    XWord nw = w;
                    nw.push_back(static_cast<XSym>(k));
                    next.emplace_back(std::move(nw), c * letter.coeff[k]);
                }
            }
            acc = std::move(next);
        }
        for (const auto& [w, c] : acc) out.add(w, c);
    }
    return out;
}

bool is_admissible(const XWord& w) {
    if (w.empty()) return true;
    return w.front() != XSym::xp1 && w.back() != XSym::a;
}

int RegPolynomial::degree() const {
    int d = 0;
    for (const auto& [pq, sum] : coeffs)
        if (!sum.empty()) d = std::max(d, pq.first + pq.second);
    return d;
}

namespace {

// Polynomial in T (index = power) whose coefficients do not start with `letter`.
std::map<int, XSum> regularize_leading(const XWord& w, XSym letter) {
    size_t p = 0;
    while (p < w.size() && w[p] == letter) ++p;
    if (p == 0) return {{0, XSum(w)}};
    std::map<int, XSum> out;
    if (p == w.size()) {
        // letter^p = T^p / p!
        mpq_class inv(1);
        for (size_t k = 2; k <= p; ++k) inv /= static_cast<long>(k);
        out[static_cast<int>(p)] = XSum(XWord{}, GaussianRational(inv));
        return out;
    }
    // letter ⧢ (letter^{p-1} v) = p letter^p v + letter^{p-1} v1 (letter ⧢ v')
    XWord lower(w.begin() + 1, w.end());
    GaussianRational inv_p(mpq_class(1, static_cast<long>(p)));
    for (auto& [k, sum] : regularize_leading(lower, letter)) out[k + 1] += inv_p * sum;
    XWord prefix(w.begin(), w.begin() + static_cast<long>(p));  // letter^p
    prefix.pop_back();
    prefix.push_back(w[p]);  // letter^{p-1} v1
    XWord rest(w.begin() + static_cast<long>(p) + 1, w.end());
    for (const auto& [u, c] : shuffle(XWord{letter}, rest)) {
        XWord word = prefix;
        word.insert(word.end(), u.begin(), u.end());
        for (auto& [k, sum] : regularize_leading(word, letter)) out[k] -= (inv_p * c) * sum;
    }
    return out;
}

XWord reversed(const XWord& w) { return XWord(w.rbegin(), w.rend()); }

}  // namespace

RegPolynomial reg_decompose(const XWord& w) {
    RegPolynomial poly;
    // trailing a: reversal is an anti-automorphism of the shuffle product
    for (const auto& [q, sum] : regularize_leading(reversed(w), XSym::a)) {
        for (const auto& [rw, c] : sum) {
            for (const auto& [p, inner] : regularize_leading(reversed(rw), XSym::xp1)) {
                XSum scaled = c * inner;
                poly.coeffs[{p, q}] += scaled;
            }
        }
    }
    for (auto it = poly.coeffs.begin(); it != poly.coeffs.end();) {
        if (it->second.empty()) it = poly.coeffs.erase(it);
        else ++it;
    }
    return poly;
}

XSum reg_expand(const RegPolynomial& poly) {
    XSum out;
    for (const auto& [pq, sum] : poly.coeffs) {
        XSum acc = sum;
        for (int k = 0; k < pq.first; ++k) acc = shuffle(acc, XSum(XWord{XSym::xp1}));
        for (int k = 0; k < pq.second; ++k) acc = shuffle(acc, XSum(XWord{XSym::a}));
        out += acc;
    }
    return out;
}

int LiIndex::weight() const {
    int w = 0;
    for (int v : s) w += v;
    return w;
}

std::string to_string(const LiIndex& li) {
    static const char* const roots[] = {"1", "i", "-1", "-i"};
    std::string out = "Li_{";
    for (size_t k = 0; k < li.s.size(); ++k) out += (k ? "," : "") + std::to_string(li.s[k]);
    out += "}(";
    for (size_t k = 0; k < li.z.size(); ++k) out += std::string(k ? "," : "") + roots[((li.z[k] % 4) + 4) % 4];
    return out + ")";
}

LiIndex word_to_li(const XWord& w) {
    if (w.empty() || !is_admissible(w)) throw std::invalid_argument("word not admissible: " + to_string(w));
    LiIndex li;
    int run = 0;
    int prev = 0;  // exponent of xi_{j-1}, xi_0 = 1
    for (XSym l : w) {
        if (l == XSym::a) {
            ++run;
            continue;
        }
        int k = root_exponent(l);
        li.s.push_back(run + 1);
        li.z.push_back(((prev - k) % 4 + 4) % 4);
        prev = k;
        run = 0;
    }
    if (run != 0) throw std::invalid_argument("word not admissible: " + to_string(w));
    return li;
}

XWord li_to_word(const LiIndex& li) {
    if (li.s.size() != li.z.size() || li.s.empty()) throw std::invalid_argument("malformed Li index");
    XWord w;
    int k = 0;
    for (size_t j = 0; j < li.s.size(); ++j) {
        if (li.s[j] < 1) throw std::invalid_argument("Li index entries must be positive");
        for (int r = 1; r < li.s[j]; ++r) w.push_back(XSym::a);
        k -= li.z[j];  // xi_j = xi_{j-1} / z_j
        w.push_back(root_letter(k));
    }
    return w;
}

}  // namespace apery
