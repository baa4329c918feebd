// apery: command-line front end to the series pipeline.
//
// Exit codes: 0 success, 1 self test failure or no relation found,
// 2 invalid input (usage, spec syntax, validation), 3 evaluation failure.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "apery/catalog.hpp"
#include "apery/evaluator.hpp"
#include "apery/golden.hpp"
#include "apery/properties.hpp"

using namespace apery;
using nlohmann::json;

namespace {

enum class Engine { march, sums, both };
enum class Stage { parsed, normalized, omega, x_alphabet, cmzv, value };

struct RunConfig {
    int digits = 40;
    Engine engine = Engine::march;
    Stage stage = Stage::value;
    bool json = false;
    bool both_alphabets = false;  // compile prints omega words and their images
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpecInput {
    std::string text;
    std::string x2;
    bool alias_n = false;
    bool bsq = false;
};

SeriesSpec read_spec(const SpecInput& in) {
    SeriesSpec spec;
    if (!in.text.empty() && in.text.front() == '{') {
        try {
            spec = spec_from_json(json::parse(in.text));
        } catch (const std::exception& e) {
            throw InputError(std::string("bad JSON spec: ") + e.what());
        }
    } else {
        ParseResult r = parse_spec(in.text);
        if (!r.spec) {
            std::ostringstream msg;
            for (const auto& e : r.errors) msg << "column " << e.pos + 1 << ": " << e.message << "\n";
            throw InputError(msg.str() + in.text + "\n" + std::string(r.errors.front().pos, ' ') + "^");
        }
        spec = *r.spec;
    }
    if (!in.x2.empty()) {
        try {
            spec.x2 = parse_rational(in.x2);
        } catch (const std::exception&) {
            throw InputError("--x2 expects p/q, got " + in.x2);
        }
    }
    if (in.bsq) spec.binom_power = 2;
    if (in.alias_n) spec = alias_even_as_n(spec);
    auto problems = validate(spec);
    if (!problems.empty()) {
        std::string msg = "invalid series " + to_dsl(spec) + ":";
        for (const auto& p : problems) msg += "\n  " + p;
        throw InputError(msg);
    }
    return spec;
}

std::string dec(const Real& v, int digits) { return v.to_string(digits); }

json complex_json(const Complex& z, int digits) { return {{"re", dec(z.re, digits)}, {"im", dec(z.im, digits)}}; }

std::string root_tag(int k) {
    static const char* tags[] = {"1", "i", "-1", "-i"};
    return tags[((k % 4) + 4) % 4];
}

json cmzv_json(const CmzvExpr& e) {
    json terms = json::array();
    for (const auto& t : e.terms) {
        json z = json::array();
        for (int k : t.li.z) z.push_back(root_tag(k));
        terms.push_back({{"coeff", t.coeff.to_string()}, {"s", t.li.s}, {"z", z}});
    }
    return {{"terms", terms},
            {"constant", e.constant.to_string()},
            {"complete", e.complete},
            {"max_reg_degree", e.max_reg_degree}};
}

std::string li_text(const LiIndex& li) {
    std::string s = "Li_{", z;
    for (size_t j = 0; j < li.s.size(); ++j) {
        s += (j ? "," : "") + std::to_string(li.s[j]);
        z += (j ? "," : "") + root_tag(li.z[j]);
    }
    return s + "}(" + z + ")";
}

// Compiled pieces of a spec the way the evaluator builds them.
std::vector<std::pair<ComboTerm, PrefactoredIntegral>> compiled_pieces(const SeriesSpec& spec) {
    std::vector<std::pair<ComboTerm, PrefactoredIntegral>> out;
    const bool squared = spec.binom_power == 2;
    SpecCombo combo = canonicalize(spec);
    bool native = false;
    for (const auto* part : {&combo.main, &combo.bundle})
        for (const auto& t : *part)
            if (squared && t.spec.factors[0].exp < 3) native = true;
    if (native) {
        out.push_back({ComboTerm{GaussianRational(1), spec}, compile_squared(spec, true)});
        return out;
    }
    for (const auto* part : {&combo.main, &combo.bundle})
        for (const auto& t : *part) out.push_back({t, squared ? compile_squared(t.spec) : compile(t.spec)});
    return out;
}

int run_stage(const SeriesSpec& spec, const RunConfig& cfg) {
    json out{{"spec", spec_to_json(spec)}, {"dsl", to_dsl(spec)}};
    std::ostringstream text;
    text << to_dsl(spec) << "  binom_power " << spec.binom_power << "  x^2 " << rational_to_string(spec.x2) << "\n";

    switch (cfg.stage) {
    case Stage::parsed:
        break;
    case Stage::normalized: {
        SpecCombo c = canonicalize(spec);
        out["normalized"] = combo_to_json(c);
        for (const auto& t : c.main) text << "main    (" << t.coeff.to_string() << ") " << to_dsl(t.spec) << "\n";
        if (!c.main_constant.is_zero()) text << "main    constant " << c.main_constant.to_string() << "\n";
        for (const auto& t : c.bundle) text << "bundle  (" << t.coeff.to_string() << ") " << to_dsl(t.spec) << "\n";
        if (!c.bundle_constant.is_zero()) text << "bundle  constant " << c.bundle_constant.to_string() << "\n";
        break;
    }
    case Stage::omega:
    case Stage::x_alphabet: {
        const bool omega = cfg.stage == Stage::omega || cfg.both_alphabets;
        const bool x = cfg.stage == Stage::x_alphabet || cfg.both_alphabets;
        json pieces = json::array();
        for (const auto& [term, pi] : compiled_pieces(spec)) {
            json piece{{"coeff", term.coeff.to_string()}, {"spec", to_dsl(term.spec)}};
            text << "(" << term.coeff.to_string() << ") " << to_dsl(term.spec) << "\n";
            if (omega) {
                json words = json::array();
                for (const auto& t : pi.terms) {
                    words.push_back(to_string(t));
                    text << "    " << to_string(t) << "\n";
                }
                piece["omega"] = words;
            }
            if (x) {
                json words = json::array();
                for (const auto& t : to_x_alphabet(pi)) {
                    words.push_back(to_string(t));
                    text << "    " << to_string(t) << "\n";
                }
                piece["x_alphabet"] = words;
            }
            pieces.push_back(piece);
        }
        out["pieces"] = pieces;
        break;
    }
    case Stage::cmzv:
    case Stage::value: {
        Precision prec(cfg.digits + 10);
        std::optional<HPComplex> march, sums;
        size_t words = 0;
        if (cfg.engine != Engine::sums) {
            EvalReport r = evaluate_series(spec, cfg.digits);
            march = r.value;
            words = r.words;
            if (r.limit_mode) out["limit_mode"] = true;
            if (r.native_fallback) out["native_fallback"] = true;
        }
        if (cfg.engine != Engine::march) sums = HPComplex(oracle_eval(spec, cfg.digits));
        const HPComplex& v = march ? *march : *sums;
        out["value"] = complex_json(v.value, cfg.digits);
        out["est_error"] = v.err.to_string(3);
        out["engine"] = cfg.engine == Engine::march ? "march" : cfg.engine == Engine::sums ? "sums" : "both";
        out["terms"] = words;
        text << "value      " << dec(v.value.re, cfg.digits);
        if (!v.value.im.is_zero()) text << (v.value.im.sign() < 0 ? " - " : " + ") << dec(abs(v.value.im), cfg.digits) << " i";
        text << "\nest_error  " << v.err.to_string(3) << "\n";
        if (march && sums) {
            Real d = abs(march->value - sums->value);
            out["sums_value"] = complex_json(sums->value, cfg.digits);
            out["engine_difference"] = d.to_string(3);
            text << "sums       " << dec(sums->value.re, cfg.digits) << "\ndifference " << d.to_string(3) << "\n";
        }
        if (cfg.stage == Stage::cmzv) {
            CmzvExpr e = lower_to_cmzv(spec);
            out["cmzv"] = cmzv_json(e);
            text << "cmzv" << (e.complete ? "" : " (incomplete: bundle left to the numeric limit)") << "\n";
            for (const auto& t : e.terms) text << "    (" << t.coeff.to_string() << ") " << li_text(t.li) << "\n";
            if (!e.constant.is_zero()) text << "    constant " << e.constant.to_string() << "\n";
        }
        break;
    }
    }
    if (cfg.json)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << text.str();
    return 0;
}

int run_verify(const SeriesSpec& spec, const std::string& relation, const RunConfig& cfg) {
    std::vector<std::string> basis;
    std::stringstream ss(relation);
    for (std::string name; std::getline(ss, name, ',');)
        if (!name.empty()) basis.push_back(name);
    for (const auto& b : basis) constant(b, 20);  // unknown names fail before the search
    auto value = [&spec](int digits) {
        Precision prec(digits + 10);
        return evaluate_series(spec, digits).value.value.re;
    };
    auto rel = find_relation(value, basis, cfg.digits);
    if (cfg.json) {
        json out{{"dsl", to_dsl(spec)}, {"basis", basis}, {"found", rel.has_value()}};
        if (rel) {
            out["relation"] = to_string(*rel, basis);
            out["value_coeff"] = rel->value_coeff.get_str();
            json c = json::array();
            for (const auto& k : rel->coeffs) c.push_back(k.get_str());
            out["coeffs"] = c;
            out["residual"] = rel->residual.to_string(3);
            out["verified"] = rel->verified;
        }
        std::cout << out.dump(2) << "\n";
    } else if (rel) {
        std::cout << to_string(*rel, basis) << "\nresidual " << rel->residual.to_string(3)
                  << (rel->verified ? "  verified at +20 digits" : "  not verified") << "\n";
    } else {
        std::cout << "no relation with height <= 1e8\n";
    }
    return rel && rel->verified ? 0 : 1;
}

int run_catalog(const std::string& name, bool list, const RunConfig& cfg) {
    if (list || name.empty()) {
        json out = json::array();
        for (const auto& n : catalog_names()) {
            if (cfg.json)
                out.push_back({{"name", n}, {"definition", catalog_definition(n)}});
            else
                std::cout << n << "  " << catalog_definition(n) << "\n";
        }
        if (cfg.json) std::cout << out.dump(2) << "\n";
        return 0;
    }
    Precision prec(cfg.digits + 10);
    HPReal v = constant(name, cfg.digits);
    if (cfg.json)
        std::cout << json{{"name", name}, {"definition", catalog_definition(name)}, {"value", dec(v.value, cfg.digits)}}
                         .dump(2)
                  << "\n";
    else
        std::cout << name << " = " << dec(v.value, cfg.digits) << "\n";
    return 0;
}

int run_selftest(const std::string& suite, const std::string& filter, const RunConfig& cfg) {
    json cases = json::array();
    int passed = 0, failed = 0;
    auto record = [&](const std::string& id, bool pass, const std::string& detail, double seconds) {
        (pass ? passed : failed)++;
        cases.push_back({{"id", id}, {"pass", pass}, {"detail", detail}, {"seconds", seconds}});
        if (!cfg.json) std::printf("%s %-28s %8.3fs  %s\n", pass ? "PASS" : "FAIL", id.c_str(), seconds, detail.c_str());
    };
    if (suite == "golden" || suite == "all") {
        for (const auto& g : golden_cases()) {
            if (!filter.empty() && g.id.find(filter) == std::string::npos && g.group.find(filter) == std::string::npos)
                continue;
            GoldenOutcome o = run_golden(g, cfg.digits);
            std::string detail = o.error.empty() ? "value " + o.value.to_string(15) + " deviation " + o.deviation.to_string(3)
                                                 : "error: " + o.error;
            record(g.id, o.pass, detail, o.seconds);
        }
    }
    if (suite == "properties" || suite == "all") {
        for (const auto& r : run_properties()) {
            if (!filter.empty() && r.name.find(filter) == std::string::npos) continue;
            record(r.name, r.pass, std::to_string(r.cases) + " cases " + r.detail, r.seconds);
        }
    }
    if (cfg.json)
        std::cout << json{{"suite", suite}, {"passed", passed}, {"failed", failed}, {"cases", cases}}.dump(2) << "\n";
    else
        std::printf("%d passed, %d failed\n", passed, failed);
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Apery-type central binomial series: compile, evaluate, and identify"};
    app.require_subcommand(1);

    RunConfig cfg;
    SpecInput in;
    std::string stage_name = "value", engine_name = "march", relation, name, suite = "all", filter;
    bool list = false;

    const std::map<std::string, Stage> stages{{"parsed", Stage::parsed},         {"normalized", Stage::normalized},
                                              {"omega", Stage::omega},           {"x-alphabet", Stage::x_alphabet},
                                              {"cmzv", Stage::cmzv},             {"value", Stage::value}};
    const std::map<std::string, Engine> engines{{"march", Engine::march}, {"sums", Engine::sums}, {"both", Engine::both}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--digits", cfg.digits, "working decimal digits")->check(CLI::Range(10, 2000));
        sub->add_flag("--json", cfg.json, "machine-readable output");
    };
    auto spec_options = [&](CLI::App* sub) {
        sub->add_option("spec", in.text, "series in the DSL, or a JSON spec object")->required();
        sub->add_option("--x2", in.x2, "evaluation point x^2 as p/q");
        sub->add_flag("--alias-n", in.alias_n, "read every e factor as n");
        sub->add_flag("--bsq", in.bsq, "binomial power 2");
        common(sub);
    };

    auto* eval = app.add_subcommand("eval", "evaluate a series");
    spec_options(eval);
    eval->add_option("--engine", engine_name, "march, sums or both")->check(CLI::IsMember({"march", "sums", "both"}));
    eval->add_option("--stage", stage_name, "stop after this stage")
        ->check(CLI::IsMember({"parsed", "normalized", "omega", "x-alphabet", "cmzv", "value"}));

    auto* compile_cmd = app.add_subcommand("compile", "show the omega words and their x-alphabet images");
    spec_options(compile_cmd);

    auto* cmzv = app.add_subcommand("cmzv", "value and colored zeta value expansion at x = 1");
    spec_options(cmzv);

    auto* verify = app.add_subcommand("verify", "search an integer relation between the value and named constants");
    spec_options(verify);
    verify->add_option("--relation", relation, "comma-separated catalog names, e.g. zeta3,G")->required();

    auto* catalog = app.add_subcommand("catalog", "reference constants");
    catalog->add_option("--name", name, "constant to print");
    catalog->add_flag("--list", list, "list names and definitions");
    common(catalog);

    auto* selftest = app.add_subcommand("selftest", "run the golden values and property checks");
    selftest->add_option("suite", suite, "golden, properties or all")
        ->check(CLI::IsMember({"golden", "properties", "all"}));
    selftest->add_option("--filter", filter, "substring of case id or group");
    common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.stage = stages.at(stage_name);
    cfg.engine = engines.at(engine_name);
    try {
        if (*catalog) return run_catalog(name, list, cfg);
        if (*selftest) return run_selftest(suite, filter, cfg);
        SeriesSpec spec = read_spec(in);
        if (*verify) return run_verify(spec, relation, cfg);
        if (*cmzv) cfg.stage = Stage::cmzv;
        if (*compile_cmd) {
            cfg.stage = Stage::omega;
            cfg.both_alphabets = true;
        }
        return run_stage(spec, cfg);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownConstant& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionTooLow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "evaluation failed: " << e.what() << "\n";
        return 3;
    }
}
