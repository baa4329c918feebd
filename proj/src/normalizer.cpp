#include "apery/normalizer.hpp"

#include <map>
#include <stdexcept>

namespace apery {

std::vector<FractionTerm> partial_fraction(const LinearFormPair& pair) {
    if (pair.cu == pair.cv) throw std::invalid_argument("partial_fraction: identical forms");
    if (pair.s < 0 || pair.t < 0) throw std::invalid_argument("partial_fraction: negative exponent");
    // V - U = D, so 1/(U^s V^t) = (1/(U^s V^{t-1}) - 1/(U^{s-1} V^t)) / D
    mpq_class inv_d(1, pair.cv - pair.cu);
    inv_d.canonicalize();
    std::map<std::pair<int, int>, mpq_class> pending{{{pair.s, pair.t}, 1}};
    std::map<int, mpq_class> on_u, on_v;
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        auto [st, c] = *it;
        pending.erase(it);
        auto [s, t] = st;
        if (t == 0) {
            on_u[s] += c;
        } else if (s == 0) {
            on_v[t] += c;
        } else {
            pending[{s, t - 1}] += c * inv_d;
            pending[{s - 1, t}] -= c * inv_d;
        }
    }
    std::vector<FractionTerm> out;
    for (auto& [e, c] : on_u)
        if (sgn(c) != 0 && e > 0) out.push_back({GaussianRational(c), pair.cu, e});
    for (auto& [e, c] : on_v)
        if (sgn(c) != 0 && e > 0) out.push_back({GaussianRational(c), pair.cv, e});
    return out;
}

namespace {

struct Level {
    int c;
    int s;
    int delta;  // n_j - n_{j+1} >= delta, n_{d+1} = 0
};

struct Work {
    GaussianRational coeff;
    std::vector<Level> levels;
    bool bundle = false;
};

int native_delta(int c) { return c == 1 ? 0 : 1; }

Form form_of(int c) {
    switch (c) {
        case 0: return Form::E;
        case 1: return Form::OPlus;
        case -1: return Form::OMinus;
    }
    throw std::logic_error("no form for 2n" + std::to_string(c));
}

int floor_div2(int c) { return c >= 0 ? c / 2 : -((-c + 1) / 2); }

// Moves an inner index so that its form is 2n or 2n+1.
void shift_inner(Work& w, size_t j) {
    int k = -floor_div2(w.levels[j].c);
    if (k == 0) return;
    w.levels[j].c += 2 * k;
    w.levels[j - 1].delta += k;
    w.levels[j].delta -= k;
}

GaussianRational inverse_power(long base, int s) {
    if (base == 0) throw std::domain_error("zero linear form in boundary term: series undefined");
    mpq_class v(1);
    mpq_class b(base);
    for (int k = 0; k < s; ++k) v /= b;
    return GaussianRational(v);
}

class Canonicalizer {
public:
    Canonicalizer(int binom_power, mpq_class x2) : power_(binom_power), x2_(std::move(x2)) {}

    void run(Work w) {
        std::vector<Work> stack{std::move(w)};
        size_t steps = 0;
        while (!stack.empty()) {
            if (++steps > 2000000) throw std::runtime_error("canonicalize: rewrite did not terminate");
            Work cur = std::move(stack.back());
            stack.pop_back();
            step(std::move(cur), stack);
        }
    }

    SpecCombo result() const {
        SpecCombo out;
        for (int b = 0; b < 2; ++b) {
            auto& dest = b ? out.bundle : out.main;
            for (const auto& [key, coeff] : terms_[b]) {
                if (coeff.is_zero()) continue;
                SeriesSpec s;
                s.binom_power = power_;
                s.x2 = x2_;
                for (const auto& [c, e] : key) {
                    s.factors.push_back({form_of(c), e});
                    s.junctions.push_back(native_junction(form_of(c)));
                }
                if (!validate(s).empty()) out.contains_divergent_piece = true;
                dest.push_back({coeff, std::move(s)});
            }
        }
        out.main_constant = constant_[0];
        out.bundle_constant = constant_[1];
        return out;
    }

private:
    void step(Work w, std::vector<Work>& stack) {
        const size_t d = w.levels.size();
        for (size_t j = 1; j < d; ++j) {
            if (w.levels[j].c != 0 && w.levels[j].c != 1) {
                shift_inner(w, j);
                stack.push_back(std::move(w));
                return;
            }
        }
        if (w.levels[0].c >= 2) {
            shift_head(std::move(w), stack);
            return;
        }
        if (w.levels[0].c < -1)
            throw std::runtime_error("canonicalize: head form 2n" + std::to_string(w.levels[0].c) + " not supported");
        // outermost first: an E index then always keeps n >= 1 while inner junctions relax
        for (size_t jj = 0; jj < d; ++jj) {
            int target = native_delta(w.levels[jj].c);
            int delta = w.levels[jj].delta;
            if (delta == target) continue;
            Work main = w;
            int e;
            GaussianRational sign(1);
            if (delta < target) {
                // sum_{>= delta} = sum_{>= delta+1} + [= delta]
                main.levels[jj].delta = delta + 1;
                e = delta;
            } else {
                // sum_{>= delta} = sum_{>= delta-1} - [= delta-1]
                main.levels[jj].delta = delta - 1;
                e = delta - 1;
                sign = GaussianRational(-1);
            }
            stack.push_back(std::move(main));
            boundary(std::move(w), jj, e, sign, stack);
            return;
        }
        emit(w);
    }

    // Head 2n+c with c >= 2: with m = n + 1, b_n^p x^{2n} = x^-2 b_m^p x^{2m} (1 - 1/(2m))^p.
    void shift_head(Work w, std::vector<Work>& stack) {
        const Level head = w.levels[0];
        const int c = head.c - 2;
        if (sgn(x2_) == 0) throw std::domain_error("canonicalize: head shift needs x^2 != 0");
        const GaussianRational scale = w.coeff / GaussianRational(x2_);
        mpz_class binom = 1;
        for (int k = 0; k <= power_; ++k) {
            if (k > 0) binom = binom * (power_ - k + 1) / k;
            GaussianRational coeff = scale * GaussianRational(mpq_class(k % 2 ? -binom : binom));
            std::vector<FractionTerm> parts;
            if (k == 0 || c == 0)
                parts.push_back({GaussianRational(1), c, head.s + (c == 0 ? k : 0)});
            else
                parts = partial_fraction({0, k, c, head.s});
            for (const auto& part : parts) {
                Work nw = w;
                nw.coeff = coeff * part.coeff;
                nw.levels[0] = Level{part.c, part.exp, head.delta + 1};
                stack.push_back(std::move(nw));
            }
        }
    }

    // The term where n_j - n_{j+1} = e exactly.
    void boundary(Work w, size_t j, int e, const GaussianRational& sign, std::vector<Work>& stack) {
        w.coeff *= sign;
        const size_t d = w.levels.size();
        if (j + 1 == d) {
            Level last = w.levels[j];
            if (d == 1) {
                if (e < 0) throw std::domain_error("canonicalize: boundary at negative head index");
                mpq_class v = binomial_weight(e);
                mpq_class val(1);
                for (int k = 0; k < power_; ++k) val *= v;
                for (int k = 0; k < e; ++k) val *= x2_;
                GaussianRational add = w.coeff * GaussianRational(val) * inverse_power(2L * e + last.c, last.s);
                constant_[w.bundle ? 1 : 0] += add;
                return;
            }
            w.coeff *= inverse_power(2L * e + last.c, last.s);
            w.levels.pop_back();
            w.levels[j - 1].delta += e;
            stack.push_back(std::move(w));
            return;
        }
        Level outer = w.levels[j];
        Level inner = w.levels[j + 1];
        int c_inner = inner.c - 2 * e;
        int new_delta = inner.delta + e;
        bool into_head = j == 0;
        std::vector<FractionTerm> parts;
        if (c_inner == outer.c) {
            parts.push_back({GaussianRational(1), outer.c, outer.s + inner.s});
        } else {
            parts = partial_fraction({outer.c, outer.s, c_inner, inner.s});
        }
        for (const auto& part : parts) {
            Work nw = w;
            nw.coeff *= part.coeff;
            nw.levels[j] = Level{part.c, part.exp, new_delta};
            nw.levels.erase(nw.levels.begin() + static_cast<long>(j) + 1);
            if (into_head) nw.bundle = true;
            stack.push_back(std::move(nw));
        }
    }

    void emit(const Work& w) {
        std::vector<std::pair<int, int>> key;
        for (const auto& l : w.levels) key.push_back({l.c, l.s});
        terms_[w.bundle ? 1 : 0][key] += w.coeff;
    }

    int power_;
    mpq_class x2_;
    std::map<std::vector<std::pair<int, int>>, GaussianRational> terms_[2];
    GaussianRational constant_[2];
};

}  // namespace

bool is_canonical(const SeriesSpec& spec) {
    for (int j = 0; j < spec.depth(); ++j) {
        Form f = spec.factors[j].form;
        if (f == Form::N) return false;
        if (j > 0 && f == Form::OMinus) return false;
        if (spec.junctions[j] != native_junction(f)) return false;
    }
    return spec.depth() > 0;
}

SpecCombo canonicalize(const SeriesSpec& spec) {
    auto v = validate(spec);
    if (!v.empty()) throw std::invalid_argument("canonicalize: " + v.front());
    Work w;
    w.coeff = GaussianRational(1);
    for (int j = 0; j < spec.depth(); ++j) {
        const Factor& f = spec.factors[j];
        int c = 0;
        switch (f.form) {
            case Form::E: c = 0; break;
            case Form::OPlus: c = 1; break;
            case Form::OMinus: c = -1; break;
            case Form::N:
                c = 0;
                w.coeff *= GaussianRational(2).pow(f.exp);
                break;
        }
        w.levels.push_back({c, f.exp, spec.junctions[j] == Junction::Strict ? 1 : 0});
    }
    Canonicalizer canon(spec.binom_power, spec.x2);
    canon.run(std::move(w));
    return canon.result();
}

nlohmann::json combo_to_json(const SpecCombo& combo) {
    auto terms = [](const std::vector<ComboTerm>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& t : v) a.push_back({{"coeff", t.coeff.to_string()}, {"spec", to_dsl(t.spec)}});
        return a;
    };
    return {{"main", terms(combo.main)},
            {"main_constant", combo.main_constant.to_string()},
            {"bundle", terms(combo.bundle)},
            {"bundle_constant", combo.bundle_constant.to_string()},
            {"contains_divergent_piece", combo.contains_divergent_piece}};
}

}  // namespace apery
