#include "apery/series.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace apery {

int SeriesSpec::weight() const {
    int w = 0;
    for (const auto& f : factors) w += f.exp;
    return w;
}

std::string form_tag(Form f) {
    switch (f) {
        case Form::E: return "e";
        case Form::OPlus: return "o+";
        case Form::OMinus: return "o-";
        case Form::N: return "n";
    }
    return "?";
}

Junction native_junction(Form f) { return f == Form::OPlus ? Junction::Weak : Junction::Strict; }

namespace {

void skip_ws(const std::string& t, size_t& i) {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
}

}  // namespace

ParseResult parse_spec(const std::string& text, int binom_power, const mpq_class& x2) {
    ParseResult out;
    SeriesSpec spec;
    spec.binom_power = binom_power;
    spec.x2 = x2;
    size_t i = 0;
    bool terminated = false;
    auto fail = [&](size_t pos, std::string msg) { out.errors.push_back({pos, std::move(msg)}); };

    while (true) {
        skip_ws(text, i);
        if (i >= text.size()) {
            fail(i, spec.factors.empty() ? "empty series" : "missing terminator '> 0' or '>= 0'");
            break;
        }
        // factor
        size_t start = i;
        std::optional<Form> form;
        if (text[i] == 'e' || text[i] == 'E') {
            form = Form::E;
            ++i;
        } else if (text[i] == 'n' || text[i] == 'N') {
            form = Form::N;
            ++i;
        } else if ((text[i] == 'o' || text[i] == 'O') && i + 1 < text.size() &&
                   (text[i + 1] == '+' || text[i + 1] == '-')) {
            form = text[i + 1] == '+' ? Form::OPlus : Form::OMinus;
            i += 2;
        } else {
            size_t end = i;
            while (end < text.size() && text[end] != ':' && text[end] != '>') ++end;
            fail(start, "unknown form tag '" + text.substr(start, end - start) + "'");
            i = end;
        }
        skip_ws(text, i);
        int exp = 0;
        if (i < text.size() && text[i] == ':') {
            ++i;
            skip_ws(text, i);
            size_t dstart = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (dstart == i) {
                fail(dstart, "expected exponent after ':'");
            } else {
                std::string digits = text.substr(dstart, i - dstart);
                if (digits.size() > 6) {
                    fail(dstart, "exponent too large");
                } else {
                    exp = std::stoi(digits);
                    if (exp == 0) fail(dstart, "exponent must be positive");
                }
            }
        } else {
            fail(i, "expected ':' after form tag");
        }
        if (form && exp > 0) spec.factors.push_back({*form, exp});
        // separator
        skip_ws(text, i);
        if (i >= text.size()) {
            fail(i, "missing terminator '> 0' or '>= 0'");
            break;
        }
        Junction junction;
        if (text.compare(i, 2, ">=") == 0) {
            junction = Junction::Weak;
            i += 2;
        } else if (text[i] == '>') {
            junction = Junction::Strict;
            i += 1;
        } else {
            fail(i, std::string("expected '>' or '>=' but found '") + text[i] + "'");
            break;
        }
        spec.junctions.push_back(junction);
        skip_ws(text, i);
        if (i < text.size() && text[i] == '0') {
            size_t zpos = i;
            ++i;
            skip_ws(text, i);
            if (i < text.size()) fail(zpos, "unexpected input after terminator");
            terminated = true;
            break;
        }
    }
    if (!terminated && out.errors.empty()) out.errors.push_back({text.size(), "missing terminator '> 0' or '>= 0'"});
    if (out.errors.empty()) {
        if (spec.junctions.size() != spec.factors.size()) {
            out.errors.push_back({0, "internal: junction count mismatch"});
        } else {
            out.spec = std::move(spec);
        }
    }
    return out;
}

SeriesSpec parse_spec_or_throw(const std::string& text, int binom_power, const mpq_class& x2) {
    ParseResult r = parse_spec(text, binom_power, x2);
    if (!r.spec) {
        std::ostringstream os;
        os << "cannot parse '" << text << "':";
        for (const auto& e : r.errors) os << " [" << e.pos << "] " << e.message << ";";
        throw std::invalid_argument(os.str());
    }
    return *r.spec;
}

std::string to_dsl(const SeriesSpec& spec) {
    std::ostringstream os;
    for (int j = 0; j < spec.depth(); ++j) {
        os << form_tag(spec.factors[j].form) << ":" << spec.factors[j].exp << " "
           << (spec.junctions[j] == Junction::Strict ? ">" : ">=") << " ";
    }
    os << "0";
    return os.str();
}

std::vector<std::string> validate(const SeriesSpec& spec) {
    std::vector<std::string> v;
    if (spec.factors.empty()) v.push_back("depth must be at least 1");
    if (spec.junctions.size() != spec.factors.size()) v.push_back("need exactly one junction per factor");
    for (size_t j = 0; j < spec.factors.size(); ++j)
        if (spec.factors[j].exp < 1) v.push_back("exponent of factor " + std::to_string(j + 1) + " must be >= 1");
    if (spec.binom_power != 1 && spec.binom_power != 2) v.push_back("binomial power must be 1 or 2");
    if (mpq_class(abs(spec.x2)) > 1) v.push_back("|x^2| must be at most 1");
    if (!v.empty()) return v;

    int q = 0;
    for (int j = 1; j <= spec.depth(); ++j)
        if (spec.factors[j - 1].form != Form::OPlus) q = j;
    if (q >= 1 && spec.junctions[q - 1] != Junction::Strict)
        v.push_back("junction after factor " + std::to_string(q) +
                    " must be strict (last factor that is not o+ needs '>'); series undefined");

    if (mpq_class(abs(spec.x2)) == 1) {
        int s1 = spec.factors[0].exp;
        bool alternating = spec.x2 < 0;
        int need = spec.binom_power == 1 ? (alternating ? 1 : 2) : (alternating ? 2 : 3);
        if (s1 < need)
            v.push_back("s1>=" + std::to_string(need) + " required at x^2=" + rational_to_string(spec.x2));
    }
    return v;
}

nlohmann::json spec_to_json(const SeriesSpec& spec) {
    nlohmann::json j;
    j["factors"] = nlohmann::json::array();
    for (const auto& f : spec.factors) j["factors"].push_back({{"form", form_tag(f.form)}, {"exp", f.exp}});
    j["junctions"] = nlohmann::json::array();
    for (auto jn : spec.junctions) j["junctions"].push_back(jn == Junction::Strict ? "strict" : "weak");
    j["binom_power"] = spec.binom_power;
    j["x2"] = rational_to_string(spec.x2);
    return j;
}

SeriesSpec spec_from_json(const nlohmann::json& j) {
    SeriesSpec s;
    for (const auto& f : j.at("factors")) {
        std::string tag = f.at("form").get<std::string>();
        Form form;
        if (tag == "e") form = Form::E;
        else if (tag == "o+") form = Form::OPlus;
        else if (tag == "o-") form = Form::OMinus;
        else if (tag == "n") form = Form::N;
        else throw std::invalid_argument("unknown form tag '" + tag + "'");
        s.factors.push_back({form, f.at("exp").get<int>()});
    }
    for (const auto& jn : j.at("junctions")) {
        std::string t = jn.get<std::string>();
        if (t == "strict" || t == ">") s.junctions.push_back(Junction::Strict);
        else if (t == "weak" || t == ">=") s.junctions.push_back(Junction::Weak);
        else throw std::invalid_argument("unknown junction '" + t + "'");
    }
    s.binom_power = j.value("binom_power", 1);
    s.x2 = parse_rational(j.value("x2", std::string("1")));
    return s;
}

mpq_class binomial_weight(int n) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2UL * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 4, static_cast<unsigned long>(n));
    mpq_class q(p, c);
    q.canonicalize();
    return q;
}

SeriesSpec alias_even_as_n(SeriesSpec spec) {
    for (auto& f : spec.factors)
        if (f.form == Form::E) f.form = Form::N;
    return spec;
}

NestedSum NestedSum::from_spec(const SeriesSpec& spec) {
    NestedSum s;
    for (const auto& f : spec.factors) {
        Linear l{2, 0, f.exp};
        switch (f.form) {
            case Form::E: break;
            case Form::OPlus: l.c = 1; break;
            case Form::OMinus: l.c = -1; break;
            case Form::N: l.a = 1; break;
        }
        s.factors.push_back({l});
    }
    for (auto j : spec.junctions) s.delta.push_back(j == Junction::Strict ? 1 : 0);
    s.binom_power = spec.binom_power;
    s.z = spec.x2;
    return s;
}

std::vector<Real> nested_partial_sums(const NestedSum& sum, const std::vector<long>& checkpoints) {
    const int d = static_cast<int>(sum.factors.size());
    if (d == 0 || static_cast<int>(sum.delta.size()) != d) throw std::invalid_argument("malformed nested sum");
    for (int dl : sum.delta)
        if (dl < 0) throw std::invalid_argument("nested sum with negative offset");
    // history[j] holds cumulative sums of level j (1-based j >= 2) for the last few n
    std::vector<std::deque<Real>> history(d + 1);
    std::vector<Real> cum(d + 1, Real(0));
    Real z(sum.z);
    Real weight(1);
    Real total(0);
    std::vector<Real> out;
    size_t next = 0;
    long n_end = checkpoints.empty() ? -1 : checkpoints.back();

    auto level_factor = [&](int j, long n) {
        Real v(1);
        for (const auto& l : sum.factors[j - 1]) {
            long den = l.a * n + l.c;
            if (den == 0) throw std::domain_error("zero denominator in nested sum");
            v /= pow(Real(den), static_cast<long>(l.s));
        }
        return v;
    };
    // cumulative of level j at index m (m may be negative)
    auto cum_at = [&](int j, long n, long m) -> Real {
        if (m < 0) return Real(0);
        long back = n - m;  // 0 means current n
        const auto& h = history[j];
        return h[h.size() - 1 - static_cast<size_t>(back)];
    };
    int max_delta = 0;
    for (int dl : sum.delta) max_delta = std::max(max_delta, dl);

    for (long n = 0; n <= n_end; ++n) {
        if (n > 0) {
            Real r = Real(2 * n) / Real(2 * n - 1);
            for (int k = 0; k < sum.binom_power; ++k) weight *= r;
            weight *= z;
        }
        Real inner;  // C_{j+1}(n)
        for (int j = d; j >= 1; --j) {
            if (j == d) {
                inner = n >= sum.delta[d - 1] ? Real(1) : Real(0);
            } else {
                inner = cum_at(j + 1, n, n - sum.delta[j - 1]);
            }
            Real p = inner.is_zero() ? Real(0) : level_factor(j, n) * inner;
            if (j >= 2) {
                cum[j] += p;
                history[j].push_back(cum[j]);
                if (history[j].size() > static_cast<size_t>(max_delta + 2)) history[j].pop_front();
            } else {
                total += weight * p;
            }
        }
        while (next < checkpoints.size() && checkpoints[next] == n) {
            out.push_back(total);
            ++next;
        }
    }
    return out;
}

namespace {

int total_exponent(const std::vector<NestedSum::Linear>& f) {
    int s = 0;
    for (const auto& l : f) s += l.s;
    return s;
}

HPReal extrapolate_at_one(const NestedSum& sum, const Real& leading, int logs, int digits) {
    (void)digits;
    int k_terms = logs == 0 ? 12 : (logs == 1 ? 9 : 7);
    int points = (logs + 1) * k_terms + 3;
    std::vector<long> ns;
    double n = 256;
    for (int i = 0; i < points; ++i) {
        long v = std::lround(n);
        if (ns.empty() || v > ns.back()) ns.push_back(v);
        n *= 1.25;
    }
    std::vector<Real> sums = nested_partial_sums(sum, ns);
    Extrapolation ex = accelerate(ns, sums, TailModel{leading, Real(1), logs});
    return {ex.value, ex.err};
}

}  // namespace

HPReal nested_sum_eval(const NestedSum& sum, int digits) {
    Precision prec(digits + 30);
    Real az = Real(mpq_class(abs(sum.z)));
    if (az < Real(1)) {
        if (sgn(sum.z) == 0) {
            std::vector<Real> s = nested_partial_sums(sum, {0});
            return {s[0], Real(0)};
        }
        double rate = -std::log(az.to_double());
        long n = static_cast<long>(std::ceil((digits + 12) * std::log(10.0) / rate)) + 60;
        std::vector<Real> s = nested_partial_sums(sum, {n - 1, n});
        Real last = abs(s[1] - s[0]);
        Real err = last * az / (Real(1) - az) * 4 + abs(s[1]) * Real::epsilon() * Real(n);
        return {s[1], err};
    }
    if (sum.z != 1) throw OracleUnavailable("oracle unavailable at x^2 = " + rational_to_string(sum.z));
    const int d = static_cast<int>(sum.factors.size());
    if (d >= 4) throw OracleUnavailable("oracle unavailable at depth >= 4 with x^2 = 1, use pipeline cross-check");
    Real leading = Real(total_exponent(sum.factors[0]) - 1) - Real(sum.binom_power) / 2;
    if (leading <= Real(0)) throw OracleUnavailable("series diverges at x^2 = 1");
    int logs = 0;
    for (int j = 1; j < d; ++j)
        if (total_exponent(sum.factors[j]) == 1) ++logs;
    logs = std::min(logs, 2);
    return extrapolate_at_one(sum, leading, logs, digits);
}

HPReal oracle_eval(const SeriesSpec& spec, int digits) {
    auto v = validate(spec);
    if (!v.empty()) throw std::invalid_argument("invalid spec: " + v.front());
    return nested_sum_eval(NestedSum::from_spec(spec), digits);
}

HPReal t_star_direct(const std::vector<int>& s, int digits) {
    if (s.empty() || s[0] < 2) throw std::invalid_argument("t*: need s1 >= 2");
    NestedSum sum;
    for (int e : s) {
        sum.factors.push_back({{2, 1, e}});
        sum.delta.push_back(0);
    }
    sum.binom_power = 0;
    sum.z = 1;
    return nested_sum_eval(sum, digits);
}

HPReal closed_form_tstar(TStarVariant variant, int d, const Real& y) {
    if (d < 1) throw std::invalid_argument("closed_form_tstar: d >= 1");
    Real half_pi = Real::pi() / 2;
    if (variant == TStarVariant::Ones) {
        if (!(y > Real(0)) || !(y < half_pi)) throw DomainError("closed_form_tstar(ones): y must lie in (0, pi/2)");
        Complex z(Real(0), tan(y));
        Complex li = polylog(d, z);
        Real v = Real(2) / sin(y * 2) * li.im;
        return {v, abs(v) * Real::epsilon() * 100};
    }
    if (!(y > Real(0)) || y > half_pi) throw DomainError("closed_form_tstar(twos): y must lie in (0, pi/2]");
    Real t = y == half_pi ? Real(1) : tan(y / 2);
    Complex li = polylog(2 * d, Complex(Real(0), t));
    Real v = Real(2) / sin(y) * li.im;
    return {v, abs(v) * Real::epsilon() * 100};
}

HPReal odd_power_sum(const std::vector<int>& s, const mpq_class& x2, int digits) {
    if (s.empty()) throw std::invalid_argument("odd_power_sum: empty composition");
    if (!(x2 > 0 && x2 < 1)) throw std::invalid_argument("odd_power_sum: need 0 < x^2 < 1");
    NestedSum sum;
    for (size_t j = 0; j < s.size(); ++j) {
        sum.factors.push_back({{2, 1, s[j]}});
        sum.delta.push_back(j + 1 < s.size() ? 1 : 0);
    }
    sum.binom_power = 0;
    sum.z = x2;
    HPReal r = nested_sum_eval(sum, digits);
    Precision prec(digits + 30);
    Real x = sqrt(Real(x2));
    return {r.value * x, r.err * x};
}

std::vector<SeriesSpec> interleave_chains(const std::vector<int>& k, const std::vector<int>& l, ChainHead head,
                                          int binom_power, const mpq_class& x2) {
    if (head.form != Form::N && head.form != Form::OPlus)
        throw std::invalid_argument("interleave_chains: head must be n or o+");
    int need = binom_power == 1 ? 2 : 3;
    if (x2 == 1 && head.exp < need) throw std::invalid_argument("interleave_chains: head exponent too small");
    std::vector<SeriesSpec> out;
    // kinds: 'h' head, 'm' zeta chain, 'r' t chain
    std::vector<char> kinds{'h'};
    std::vector<Factor> factors{{head.form, head.exp}};
    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
        if (i == k.size() && j == l.size()) {
            SeriesSpec s;
            s.factors = factors;
            s.binom_power = binom_power;
            s.x2 = x2;
            for (size_t p = 0; p < kinds.size(); ++p) {
                char a = kinds[p];
                if (p + 1 == kinds.size()) {
                    bool strict = a == 'm' || (a == 'h' && head.form == Form::N);
                    s.junctions.push_back(strict ? Junction::Strict : Junction::Weak);
                    continue;
                }
                char b = kinds[p + 1];
                bool weak = (a == 'h' && b == 'm') || (a == 'r' && b == 'm');
                s.junctions.push_back(weak ? Junction::Weak : Junction::Strict);
            }
            out.push_back(std::move(s));
            return;
        }
        if (i < k.size()) {
            kinds.push_back('m');
            factors.push_back({Form::N, k[i]});
            rec(i + 1, j);
            kinds.pop_back();
            factors.pop_back();
        }
        if (j < l.size()) {
            kinds.push_back('r');
            factors.push_back({Form::OPlus, l[j]});
            rec(i, j + 1);
            kinds.pop_back();
            factors.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

HPReal chain_product_sum(const std::vector<int>& k, const std::vector<int>& l, ChainHead head, int binom_power,
                         int digits, long n_max) {
    Precision prec(digits + 30);
    const size_t dk = k.size(), dl = l.size();
    std::vector<Real> zc(dk + 1, Real(0)), tc(dl + 1, Real(0));
    zc[dk] = Real(1);
    tc[dl] = Real(1);
    std::vector<long> ns;
    double g = static_cast<double>(n_max) / 16.0;
    int logs = 0;
    for (int e : k) logs += e == 1;
    for (int e : l) logs += e == 1;
    logs = std::min(logs, 2);
    int points = logs == 0 ? 14 : (logs == 1 ? 19 : 22);
    double ratio = std::pow(16.0, 1.0 / (points - 1));
    for (int i = 0; i < points; ++i) {
        long v = i + 1 == points ? n_max : std::lround(g);
        if (ns.empty() || v > ns.back()) ns.push_back(v);
        g *= ratio;
    }
    std::vector<Real> sums;
    Real total(0);
    Real weight(1);
    size_t next = 0;
    long n0 = head.form == Form::N ? 1 : 0;
    for (long n = 0; n <= n_max; ++n) {
        if (n > 0) {
            Real r = Real(2 * n) / Real(2 * n - 1);
            for (int p = 0; p < binom_power; ++p) weight *= r;
            // t chain: include r = n - 1
            for (size_t i = 0; i < dl; ++i) {
                Real term = tc[i + 1] / pow(Real(2 * (n - 1) + 1), static_cast<long>(l[i]));
                tc[i] += term;
            }
            // zeta chain: include m = n
            for (size_t i = 0; i < dk; ++i) {
                Real term = zc[i + 1] / pow(Real(n), static_cast<long>(k[i]));
                zc[i] += term;
            }
        }
        if (n >= n0) {
            long den = head.form == Form::N ? n : 2 * n + 1;
            total += weight * zc[0] * tc[0] / pow(Real(den), static_cast<long>(head.exp));
        }
        while (next < ns.size() && ns[next] == n) {
            sums.push_back(total);
            ++next;
        }
    }
    Real leading = Real(head.exp - 1) - Real(binom_power) / 2;
    Extrapolation ex = accelerate(ns, sums, TailModel{leading, Real(1), logs});
    return {ex.value, ex.err};
}

}  // namespace apery
