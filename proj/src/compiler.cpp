#include "apery/compiler.hpp"

#include <stdexcept>

namespace apery {

std::string prefactor_tag(Prefactor p) {
    switch (p) {
        case Prefactor::f1: return "f1";
        case Prefactor::f2: return "f2";
        case Prefactor::f3: return "f3";
        case Prefactor::f5: return "f5";
        case Prefactor::f20: return "f20";
    }
    return "?";
}

Real prefactor_value(Prefactor p, const Real& x) {
    switch (p) {
        case Prefactor::f1: return Real(1);
        case Prefactor::f2: return x / sqrt(Real(1) - x * x);
        case Prefactor::f3: return Real(1) / x;
        case Prefactor::f5: return x;
        case Prefactor::f20: return Real(1) / (x * sqrt(Real(1) - x * x));
    }
    return Real(0);
}

namespace {

using Alternatives = std::vector<std::pair<Prefactor, OmegaWord>>;

OmegaWord zeros(int k) { return OmegaWord(static_cast<size_t>(std::max(k, 0)), Omega::w0); }

OmegaWord cat(std::initializer_list<OmegaWord> parts) {
    OmegaWord w;
    for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
    return w;
}

Alternatives head_words(Form form, int s) {
    switch (form) {
        case Form::E:
        case Form::N:
            if (s >= 2) return {{Prefactor::f1, cat({zeros(s - 2), {Omega::w1}})}};
            return {{Prefactor::f2, {}}};
        case Form::OPlus:
            if (s >= 2) return {{Prefactor::f3, cat({zeros(s - 2), {Omega::w3}})}};
            return {{Prefactor::f20, {}}};
        case Form::OMinus:
            if (s >= 2)
                return {{Prefactor::f5, cat({zeros(s - 1), {Omega::w3}})},
                        {Prefactor::f5, cat({zeros(s - 2), {Omega::w3}})}};
            return {{Prefactor::f5, {Omega::w3}}, {Prefactor::f2, {}}};
    }
    return {};
}

std::vector<OmegaWord> middle_words(Form form, int s) {
    switch (form) {
        case Form::E:
        case Form::N:
            if (s == 1) return {{Omega::w2}};
            return {cat({{Omega::w1}, zeros(s - 2), {Omega::w1}})};
        case Form::OPlus:
            if (s == 1) return {{Omega::w20}};
            return {cat({{Omega::w3}, zeros(s - 2), {Omega::w3}})};
        case Form::OMinus:
            if (s == 1) return {{Omega::w5, Omega::w3}, {Omega::w2}};
            return {cat({{Omega::w5}, zeros(s - 1), {Omega::w3}}), cat({{Omega::w5}, zeros(s - 2), {Omega::w3}})};
    }
    return {};
}

std::vector<OmegaWord> squared_head_words(Form form, int s) {
    switch (form) {
        case Form::E:
        case Form::N:
            return {cat({{Omega::w3}, zeros(s - 3), {Omega::w1}})};
        case Form::OPlus:
            return {cat({{Omega::w1}, zeros(s - 3), {Omega::w3}})};
        case Form::OMinus: {
            // w1 (w0 + 1)^2 w0^{s-3} w3 with the constant deleting its slot
            std::vector<OmegaWord> out;
            for (int extra : {2, 1, 1, 0}) out.push_back(cat({{Omega::w1}, zeros(s - 3 + extra), {Omega::w3}}));
            return out;
        }
    }
    return {};
}

void check_structure(const SeriesSpec& spec, bool native) {
    if (spec.depth() == 0) throw CompileError("empty series");
    for (int j = 0; j < spec.depth(); ++j) {
        Form f = spec.factors[j].form;
        if (spec.junctions[j] != native_junction(f))
            throw CompileError("junction after factor " + std::to_string(j + 1) + " is not native; canonicalize first");
        if (j > 0 && f == Form::OMinus && !native)
            throw CompileError("o- outside the head needs native mode; canonicalize first");
    }
}

GaussianRational alias_coefficient(const SeriesSpec& spec) {
    GaussianRational c(1);
    for (const auto& f : spec.factors)
        if (f.form == Form::N) c *= GaussianRational(2).pow(f.exp);
    return c;
}

PrefactoredIntegral assemble(const std::vector<std::pair<Prefactor, OmegaWord>>& heads, const SeriesSpec& spec,
                             GaussianRational coeff) {
    std::vector<std::pair<Prefactor, OmegaWord>> partial = heads;
    for (int j = 1; j < spec.depth(); ++j) {
        std::vector<std::pair<Prefactor, OmegaWord>> next;
        for (const auto& [pre, w] : partial)
            for (const auto& m : middle_words(spec.factors[j].form, spec.factors[j].exp))
                next.push_back({pre, cat({w, m})});
        partial = std::move(next);
    }
    PrefactoredIntegral out;
    for (auto& [pre, w] : partial) {
        w.push_back(Omega::w1);
        out.terms.push_back({coeff, pre, std::move(w)});
    }
    return out;
}

}  // namespace

PrefactoredIntegral compile(const SeriesSpec& spec, bool native) {
    if (spec.binom_power != 1) throw CompileError("compile handles binomial power 1; use compile_squared");
    check_structure(spec, native);
    const Factor& head = spec.factors[0];
    return assemble(head_words(head.form, head.exp), spec, alias_coefficient(spec));
}

PrefactoredIntegral compile_squared(const SeriesSpec& spec, bool native) {
    if (spec.binom_power != 2) throw CompileError("compile_squared needs binomial power 2");
    if (spec.x2 != 1) throw CompileError("squared-binomial rules hold at x = 1 only");
    check_structure(spec, native);
    const Factor& head = spec.factors[0];
    if (head.exp < 3) throw CompileError("squared-binomial rules need s1 >= 3");
    std::vector<std::pair<Prefactor, OmegaWord>> heads;
    for (auto& w : squared_head_words(head.form, head.exp)) heads.push_back({Prefactor::f1, std::move(w)});
    PrefactoredIntegral out = assemble(heads, spec, alias_coefficient(spec));
    out.squared = true;
    return out;
}

OmegaWord odd_power_word(const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("odd_power_word: empty composition");
    OmegaWord w;
    for (size_t j = 0; j < s.size(); ++j) {
        if (s[j] < 1) throw std::invalid_argument("odd_power_word: entries must be positive");
        auto z = zeros(s[j] - 1);
        w.insert(w.end(), z.begin(), z.end());
        w.push_back(j + 1 < s.size() ? Omega::w2 : Omega::w8);
    }
    return w;
}

std::string to_string(const PrefactoredTerm& t) {
    OmegaWord body(t.word.begin(), t.word.end() - (t.word.empty() ? 0 : 1));
    return "(" + t.coeff.to_string() + ") [" + prefactor_tag(t.prefactor) + "] " + to_string(body) + " | " +
           (t.word.empty() ? "1" : omega_tag(t.word.back()));
}

}  // namespace apery
