#include "apery/catalog.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "apery/march.hpp"
#include "apery/words.hpp"

namespace apery {

namespace {

using Producer = std::function<Real(int)>;

struct Entry {
    std::string name;
    std::string definition;
    Producer value;
};

Real li_real(const LiIndex& li, int digits, bool imag) {
    HPComplex v = march_x(li_to_word(li), Real(0), digits);
    return imag ? v.value.im : v.value.re;
}

Real half_polylog(int s) { return polylog(s, Complex(Real(1) / 2)).re; }
Real im_polylog_1pi(int s) { return polylog(s, Complex(Real(1) / 2, Real(1) / 2)).im; }

// The G pi log 2 term is fixed by the integral -int td tz td td; see the catalog test.
Real w4(int) {
    Real pi = Real::pi(), l2 = Real::log2(), g = Real::catalan();
    return -g * g * 2 - pow(pi, 4) * 49 / 720 + pi * im_polylog_1pi(3) * 2 - pi * pi * l2 * l2 * 11 / 48 +
           pow(l2, 4) / 6 + g * pi * l2 * 2 + half_polylog(4) * 4;
}

Real w5(int d) {
    Real pi = Real::pi(), l2 = Real::log2();
    Real inner = im_polylog_1pi(4) * 16 - dirichlet_beta(4) * 17 + im_polylog_1pi(3) * l2 * 8;
    return l2 * half_polylog(4) * 5 + half_polylog(5) * 21 + pi * inner + pow(pi, 4) * l2 * 379 / 2880 +
           pow(l2, 5) / 30 - li_real({{3, 1, 1}, {0, 0, 1}}, d, false) * 16 -
           pi * pi * (pow(l2, 3) * 16 - Real::zeta(3) * 29) / 192 - Real::zeta(5) * 27 / 4;
}

Real w6(int d) {
    Real pi = Real::pi(), l2 = Real::log2(), g = Real::catalan();
    Real z3 = Real::zeta(3), z5 = Real::zeta(5), b4 = dirichlet_beta(4);
    Real sum = half_polylog(6) * 68 - pow(pi, 6) * 7655 / 27648;
    sum += pi * li_real({{4, 1}, {1, 0}}, d, true) * 61 / 2;
    sum -= pi * li_real({{4, 1}, {1, 2}}, d, true) * 41 / 2;
    sum += pi * im_polylog_1pi(5) * 96;
    sum -= pi * b4 * l2 * 19;
    sum += pi * im_polylog_1pi(4) * l2 * 32;
    sum -= pow(pi, 4) * l2 * l2 * 181 / 2880;
    sum -= pi * pi * pow(l2, 4) / 96;
    sum += pow(l2, 6) / 90;
    sum -= li_real({{5, 1}, {2, 0}}, d, false) * 169 / 4;
    sum -= pi * pi * half_polylog(4) * 5 / 12;
    sum += l2 * half_polylog(5) * 10;
    sum -= g * b4 * 24;
    sum -= pi * pi * l2 * z3 * 6;
    sum -= li_real({{4, 2}, {2, 1}}, d, false) * 24;
    sum += li_real({{3, 1, 1, 1}, {0, 0, 0, 1}}, d, false) * 64;
    sum += z3 * z3 * 8195 / 128;
    sum += l2 * z5 * 2821 / 32;
    return sum;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = [] {
        std::vector<Entry> t;
        auto plain = [&t](std::string name, std::string def, std::function<Real()> f) {
            t.push_back({std::move(name), std::move(def), [f](int) { return f(); }});
        };
        plain("1", "1", [] { return Real(1); });
        plain("pi", "pi", [] { return Real::pi(); });
        plain("pi^2", "pi^2", [] { return Real::pi() * Real::pi(); });
        plain("log2", "log 2", [] { return Real::log2(); });
        plain("G", "Catalan's constant beta(2)", [] { return Real::catalan(); });
        plain("G^2", "G^2", [] { return Real::catalan() * Real::catalan(); });
        plain("zeta2", "zeta(2)", [] { return Real::zeta(2); });
        plain("zeta3", "zeta(3)", [] { return Real::zeta(3); });
        plain("zeta5", "zeta(5)", [] { return Real::zeta(5); });
        plain("beta4", "Dirichlet beta(4)", [] { return dirichlet_beta(4); });
        for (int k = 1; k <= 6; ++k)
            plain("Li" + std::to_string(k) + "(1/2)", "Li_" + std::to_string(k) + "(1/2)",
                  [k] { return half_polylog(k); });
        for (int k = 3; k <= 5; ++k)
            plain("ImLi" + std::to_string(k) + "((1+i)/2)", "Im Li_" + std::to_string(k) + "((1+i)/2)",
                  [k] { return im_polylog_1pi(k); });
        t.push_back({"ImLi4,1(i,1)", "Im Li_{4,1}(i,1)", [](int d) { return li_real({{4, 1}, {1, 0}}, d, true); }});
        t.push_back({"ImLi4,1(i,-1)", "Im Li_{4,1}(i,-1)", [](int d) { return li_real({{4, 1}, {1, 2}}, d, true); }});
        t.push_back({"ReLi3,1,1(1,1,i)", "Re Li_{3,1,1}(1,1,i)",
                     [](int d) { return li_real({{3, 1, 1}, {0, 0, 1}}, d, false); }});
        t.push_back({"ReLi4,2(-1,i)", "Re Li_{4,2}(-1,i)", [](int d) { return li_real({{4, 2}, {2, 1}}, d, false); }});
        t.push_back({"ReLi3,1,1,1(1,1,1,i)", "Re Li_{3,1,1,1}(1,1,1,i)",
                     [](int d) { return li_real({{3, 1, 1, 1}, {0, 0, 0, 1}}, d, false); }});
        t.push_back({"zeta(-5,1)", "Li_{5,1}(-1,1)", [](int d) { return li_real({{5, 1}, {2, 0}}, d, false); }});
        t.push_back({"W4", "-2G^2 - 49/720 pi^4 + 2 pi Im Li_3((1+i)/2) - 11/48 pi^2 log^2 2 + log^4 2/6 + 2 G pi log 2 + 4 Li_4(1/2)", w4});
        t.push_back({"W5", "5 log2 Li_4(1/2) + 21 Li_5(1/2) + pi(16 Im Li_4((1+i)/2) - 17 beta(4) + ...) + ...", w5});
        t.push_back({"W6", "68 Li_6(1/2) - 7655/27648 pi^6 + 61/2 pi Im Li_{4,1}(i,1) - ...", w6});
        return t;
    }();
    return table;
}

const Entry& find_entry(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return e;
    throw UnknownConstant("unknown constant '" + name + "'");
}

struct Cache {
    std::shared_mutex mutex;
    std::map<std::string, std::pair<int, Real>> values;
};

Cache& cache() {
    static Cache c;
    return c;
}

Real pow10(long e) { return pow(Real(10), e); }

mpz_class to_mpz(const Real& r) {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), round_nearest(r).raw(), MPFR_RNDN);
    return z;
}

Real basis_residual(const Real& value, const std::vector<Real>& basis, const mpz_class& c0,
                    const std::vector<mpz_class>& c) {
    Real r = value * Real(mpq_class(c0));
    for (size_t i = 0; i < basis.size(); ++i) r += basis[i] * Real(mpq_class(c[i]));
    return abs(r);
}

std::vector<Real> basis_values(const std::vector<std::string>& basis, int digits) {
    std::vector<Real> out;
    for (const auto& b : basis) out.push_back(constant(b, digits).value);
    return out;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& e : entries()) n.push_back(e.name);
        return n;
    }();
    return names;
}

std::string catalog_definition(const std::string& name) { return find_entry(name).definition; }

HPReal constant(const std::string& name, int digits) {
    const Entry& e = find_entry(name);
    Cache& c = cache();
    {
        std::shared_lock lock(c.mutex);
        auto it = c.values.find(name);
        if (it != c.values.end() && it->second.first >= digits) return HPReal(it->second.second, pow10(-digits - 5));
    }
    Real v;
    {
        Precision prec(digits + 15);
        v = e.value(digits + 10);
    }
    std::unique_lock lock(c.mutex);
    auto& slot = c.values[name];
    if (slot.first < digits) slot = {digits, v};
    return HPReal(v, pow10(-digits - 5));
}

std::optional<std::vector<mpz_class>> pslq(const std::vector<Real>& input, int digits, double max_height) {
    const int n = static_cast<int>(input.size());
    if (n < 2) throw std::invalid_argument("pslq needs at least two numbers");
    Precision prec(digits + 10);
    const Real gamma = sqrt(Real(4) / 3);
    const Real eps = pow10(-digits + 4);

    std::vector<Real> x(input.begin(), input.end());
    Real norm(0);
    for (const auto& v : x) norm += v * v;
    norm = sqrt(norm);
    if (norm.is_zero()) throw std::invalid_argument("pslq on the zero vector");
    for (auto& v : x) v /= norm;

    std::vector<Real> s(static_cast<size_t>(n));
    {
        Real acc(0);
        for (int k = n - 1; k >= 0; --k) {
            acc += x[k] * x[k];
            s[k] = sqrt(acc);
        }
    }
    // H is n x (n-1); A and B are n x n integer matrices held exactly in Real
    std::vector<std::vector<Real>> h(n, std::vector<Real>(n - 1, Real(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n - 1 && j <= i; ++j) {
            if (i == j)
                h[i][j] = s[j + 1] / s[j];
            else
                h[i][j] = -(x[i] * x[j]) / (s[j] * s[j + 1]);
        }
    std::vector<std::vector<Real>> a(n, std::vector<Real>(n, Real(0))), b = a;
    for (int i = 0; i < n; ++i) a[i][i] = b[i][i] = Real(1);
    std::vector<Real> y = x;

    auto reduce = [&](int i, int j) {
        if (h[j][j].is_zero()) return;
        Real t = round_nearest(h[i][j] / h[j][j]);
        if (t.is_zero()) return;
        y[j] += t * y[i];
        for (int k = 0; k <= j; ++k) h[i][k] -= t * h[j][k];
        for (int k = 0; k < n; ++k) {
            a[i][k] -= t * a[j][k];
            b[k][j] += t * b[k][i];
        }
    };
    for (int i = 1; i < n; ++i)
        for (int j = i - 1; j >= 0; --j) reduce(i, j);

    for (int iter = 0; iter < 100000; ++iter) {
        int m = 0;
        Real best(-1), g(1);
        for (int i = 0; i < n - 1; ++i) {
            g *= gamma;
            Real v = g * abs(h[i][i]);
            if (v > best) {
                best = v;
                m = i;
            }
        }
        std::swap(y[m], y[m + 1]);
        std::swap(a[m], a[m + 1]);
        std::swap(h[m], h[m + 1]);
        for (int k = 0; k < n; ++k) std::swap(b[k][m], b[k][m + 1]);
        if (m < n - 2) {
            Real t0 = sqrt(h[m][m] * h[m][m] + h[m][m + 1] * h[m][m + 1]);
            Real t1 = h[m][m] / t0, t2 = h[m][m + 1] / t0;
            for (int i = m; i < n; ++i) {
                Real t3 = h[i][m], t4 = h[i][m + 1];
                h[i][m] = t1 * t3 + t2 * t4;
                h[i][m + 1] = t1 * t4 - t2 * t3;
            }
        }
        for (int i = m + 1; i < n; ++i)
            for (int j = std::min(i - 1, m + 1); j >= 0; --j) reduce(i, j);

        for (int j = 0; j < n; ++j) {
            if (abs(y[j]) < eps) {
                std::vector<mpz_class> rel;
                for (int k = 0; k < n; ++k) rel.push_back(to_mpz(b[k][j]));
                return rel;
            }
        }
        Real hmax(0);
        for (int i = 0; i < n - 1; ++i)
            if (abs(h[i][i]) > hmax) hmax = abs(h[i][i]);
        if (!hmax.is_zero() && Real(1) / hmax > Real(max_height)) return std::nullopt;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (abs(a[i][k]) > pow10(digits)) return std::nullopt;
    }
    return std::nullopt;
}

namespace {

std::optional<Relation> search(const Real& value, const std::vector<std::string>& basis, int digits) {
    if (digits < 10 * static_cast<int>(basis.size()))
        throw PrecisionTooLow("find_relation needs at least " + std::to_string(10 * basis.size()) + " digits");
    Precision prec(digits + 10);
    std::vector<Real> bv = basis_values(basis, digits);
    std::vector<Real> x{value};
    x.insert(x.end(), bv.begin(), bv.end());
    auto rel = pslq(x, digits);
    if (!rel) return std::nullopt;
    Relation r;
    r.value_coeff = (*rel)[0];
    r.coeffs.assign(rel->begin() + 1, rel->end());
    if (r.value_coeff == 0) return std::nullopt;  // relation among the basis alone
    if (r.value_coeff < 0) {
        r.value_coeff = -r.value_coeff;
        for (auto& c : r.coeffs) c = -c;
    }
    mpz_class height = abs(r.value_coeff);
    for (const auto& c : r.coeffs)
        if (abs(c) > height) height = abs(c);
    if (height > mpz_class(100000000)) return std::nullopt;
    r.residual = basis_residual(value, bv, r.value_coeff, r.coeffs);
    if (r.residual > pow10(-digits + 4)) return std::nullopt;
    r.height_bound = 1e8;
    return r;
}

}  // namespace

std::optional<Relation> find_relation(const std::function<Real(int)>& value, const std::vector<std::string>& basis,
                                      int digits) {
    Real v;
    {
        Precision prec(digits + 10);
        v = value(digits);
    }
    auto r = search(v, basis, digits);
    if (!r) return r;
    const int hi = digits + 20;
    Precision prec(hi + 10);
    Real v_hi = value(hi);
    Real res = basis_residual(v_hi, basis_values(basis, hi), r->value_coeff, r->coeffs);
    r->verified = res < pow10(-hi + 4);
    if (!r->verified) return std::nullopt;
    return r;
}

std::optional<Relation> find_relation(const Real& value, const std::vector<std::string>& basis, int digits) {
    auto r = search(value, basis, digits);
    if (!r) return r;
    const int carried = static_cast<int>(static_cast<double>(value.precision()) * std::log10(2.0)) - 5;
    if (carried >= digits + 20) {
        const int hi = digits + 20;
        Precision prec(hi + 10);
        Real res = basis_residual(value, basis_values(basis, hi), r->value_coeff, r->coeffs);
        r->verified = res < pow10(-hi + 4);
        if (!r->verified) return std::nullopt;
    }
    return r;
}

std::string to_string(const Relation& r, const std::vector<std::string>& basis) {
    std::string out = r.value_coeff.get_str() + "*value";
    for (size_t i = 0; i < basis.size(); ++i) {
        if (r.coeffs[i] == 0) continue;
        out += (r.coeffs[i] < 0 ? " - " : " + ") + mpz_class(abs(r.coeffs[i])).get_str() + "*" + basis[i];
    }
    return out + " = 0";
}

}  // namespace apery
