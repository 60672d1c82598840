#pragma once

#include <map>
#include <string>
#include <vector>

#include "hlkit/tpoly.hpp"

namespace hlkit {

/// Exponent vector of a monomial in x_1..x_n; entry i is the power of x_{i+1}.
using ExponentVector = std::vector<int>;

/// Symmetric-polynomial accumulator: finite map from exponent vectors of a
/// fixed length n to t-polynomial coefficients. Zero coefficients are never
/// stored; iteration order is lexicographic in the exponent vector.
class SymPoly {
public:
    explicit SymPoly(std::size_t n) : n_(n) {}

    std::size_t num_vars() const { return n_; }
    std::size_t num_terms() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Adds coef * x^exps. Throws std::invalid_argument on length mismatch.
    void accumulate(const ExponentVector& exps, const TPoly& coef);
    /// Coefficient of x^exps (zero polynomial if absent).
    TPoly coeff(const ExponentVector& exps) const;

    const std::map<ExponentVector, TPoly>& terms() const { return terms_; }

    SymPoly& operator+=(const SymPoly& o);
    /// Divides every coefficient exactly by d.
    void exact_div_all(const TPoly& d);

    /// True when every exponent vector sums to the same total degree.
    bool is_homogeneous(int degree) const;
    /// Applies a variable permutation: x_i -> x_{w(i)}. w is one-line, 1-based.
    SymPoly permute_variables(const std::vector<int>& w) const;

    bool operator==(const SymPoly&) const = default;

    std::string to_string() const;
    /// {"terms":[{"exps":[...],"coeffs":["..",".."]}]} with decimal-string
    /// coefficients, terms in lexicographic exponent order.
    std::string to_json_string() const;

private:
    std::size_t n_;
    std::map<ExponentVector, TPoly> terms_;
};

}  // namespace hlkit
