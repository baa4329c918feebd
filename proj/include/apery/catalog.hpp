#pragma once

// Named reference constants and integer-relation detection over them.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "apery/numeric.hpp"

namespace apery {

class UnknownConstant : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Names accepted by constant(), in display order.
const std::vector<std::string>& catalog_names();
std::string catalog_definition(const std::string& name);

/// Value to `digits` digits; cached per precision, thread safe.
HPReal constant(const std::string& name, int digits);

class PrecisionTooLow : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Relation {
    mpz_class value_coeff;            // c0
    std::vector<mpz_class> coeffs;    // one per basis name
    Real residual;                    // |c0 v + sum c_i b_i| at the search precision
    bool verified = false;            // residual also small at +20 digits
    double height_bound = 0;          // no relation of smaller height exists below this
};

/// Integer relation c0 value + sum c_i basis_i = 0 with height <= 10^8 by PSLQ.
/// `value` produces the number at a requested digit count so the relation can be
/// re-checked at digits + 20. Needs digits >= 10 * (basis size).
std::optional<Relation> find_relation(const std::function<Real(int)>& value, const std::vector<std::string>& basis,
                                      int digits);
/// Same with a fixed value; re-verification uses whatever precision the value carries.
std::optional<Relation> find_relation(const Real& value, const std::vector<std::string>& basis, int digits);

/// Plain PSLQ on a vector; returns the coefficients or nothing within the height cap.
std::optional<std::vector<mpz_class>> pslq(const std::vector<Real>& x, int digits, double max_height = 1e8);

std::string to_string(const Relation& r, const std::vector<std::string>& basis);

}  // namespace apery
