#pragma once

// Series specifications: the parity-typed nested sums
//   sum_{n_1 >_1 n_2 >_2 ... n_d >_d 0} b_{n_1}^p x^{2 n_1} / prod l_j(n_j)^{s_j}
// with b_n = 4^n / C(2n, n), plus the direct-summation oracle.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "apery/gaussian.hpp"
#include "apery/numeric.hpp"

namespace apery {

/// Linear form of a summation index: E = 2n, OPlus = 2n+1, OMinus = 2n-1, N = n.
enum class Form { E, OPlus, OMinus, N };
enum class Junction { Strict, Weak };

struct Factor {
    Form form;
    int exp;
    friend bool operator==(const Factor&, const Factor&) = default;
};

struct SeriesSpec {
    std::vector<Factor> factors;
    std::vector<Junction> junctions;  // junctions[j] sits after index j; the last one is against 0
    int binom_power = 1;
    mpq_class x2 = 1;

    int depth() const { return static_cast<int>(factors.size()); }
    int weight() const;
    friend bool operator==(const SeriesSpec& a, const SeriesSpec& b) {
        return a.factors == b.factors && a.junctions == b.junctions && a.binom_power == b.binom_power &&
               a.x2 == b.x2;
    }
};

std::string form_tag(Form f);
/// Junction that the block rules produce after a block of the given form.
Junction native_junction(Form f);

struct SyntaxError {
    size_t pos;
    std::string message;
};

struct ParseResult {
    std::optional<SeriesSpec> spec;
    std::vector<SyntaxError> errors;
};

/// Grammar: factor (sep factor)* sep "0", factor := ("e"|"o+"|"o-"|"n") ":" int, sep := ">" | ">=".
ParseResult parse_spec(const std::string& text, int binom_power = 1, const mpq_class& x2 = 1);
/// Like parse_spec but throws std::invalid_argument listing every syntax error.
SeriesSpec parse_spec_or_throw(const std::string& text, int binom_power = 1, const mpq_class& x2 = 1);
std::string to_dsl(const SeriesSpec& spec);

/// Empty iff the spec defines a convergent series at its x^2.
std::vector<std::string> validate(const SeriesSpec& spec);

nlohmann::json spec_to_json(const SeriesSpec& spec);
SeriesSpec spec_from_json(const nlohmann::json& j);

/// b_n = 4^n / C(2n, n) exactly.
mpq_class binomial_weight(int n);

/// Replaces every E factor by N (so each contributes 2^s more).
SeriesSpec alias_even_as_n(SeriesSpec spec);

/// A general nested sum over indices n_1..n_d with
///   weight(n_1) = b_{n_1}^p * z^{n_1}, factors prod_j prod_k (a n_j + c)^-s,
///   constraints n_j - n_{j+1} >= delta_j and n_{d+1} = 0.
struct NestedSum {
    struct Linear {
        int a;  // 1 or 2
        int c;
        int s;
    };
    std::vector<std::vector<Linear>> factors;
    std::vector<int> delta;
    int binom_power = 1;
    mpq_class z = 1;  // plays the role of x^2

    static NestedSum from_spec(const SeriesSpec& spec);
};

/// Partial sums S(N) for the listed N (ascending), computed in one pass.
std::vector<Real> nested_partial_sums(const NestedSum& sum, const std::vector<long>& checkpoints);

/// Direct summation with geometric tail bound for |z| < 1, or tail extrapolation at z = 1.
HPReal nested_sum_eval(const NestedSum& sum, int digits);

class OracleUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Independent value of a series by direct summation.
HPReal oracle_eval(const SeriesSpec& spec, int digits);

/// t*(s) = sum_{n_1 >= ... >= n_d >= 0} prod (2 n_j + 1)^-s_j, s_1 >= 2.
HPReal t_star_direct(const std::vector<int>& s, int digits);

enum class TStarVariant { Ones, Twos };
/// Closed forms of sum b_{n_1}(sin y) / prod(2 n_j + 1) with all exponents 1 (Ones)
/// or all exponents 2 (Twos), through Im Li at i tan y and i tan(y/2).
HPReal closed_form_tstar(TStarVariant variant, int d, const Real& y);

/// sum_{n_1 > ... > n_d >= 0} x^{2 n_1 + 1} / prod (2 n_j + 1)^{s_j} by direct summation.
HPReal odd_power_sum(const std::vector<int>& s, const mpq_class& x2, int digits);

struct ChainHead {
    Form form;  // N or OPlus
    int exp;
};

/// Specs whose sum equals sum_n b_n^p zeta_n(k) t_n(l) / head(n)^exp, with
/// zeta_n(k) = sum_{n >= m_1 > ... > 0} prod m^-k and t_n(l) = sum_{n > r_1 > ... >= 0} prod (2r+1)^-l.
std::vector<SeriesSpec> interleave_chains(const std::vector<int>& k, const std::vector<int>& l, ChainHead head,
                                          int binom_power, const mpq_class& x2 = 1);

/// Brute-force value of sum_n b_n^p zeta_n(k) t_n(l) / head(n)^exp with tail extrapolation.
HPReal chain_product_sum(const std::vector<int>& k, const std::vector<int>& l, ChainHead head, int binom_power,
                         int digits, long n_max = 4000);

}  // namespace apery
