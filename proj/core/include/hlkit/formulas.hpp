#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlkit/fillings.hpp"
#include "hlkit/sympoly.hpp"
#include "hlkit/walks.hpp"

namespace hlkit {

/// Thrown when an enumeration would exceed the configured pair budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(std::uint64_t budget)
        : std::runtime_error("enumeration budget of " + std::to_string(budget) +
                             " admissible pairs exceeded") {}
};

struct EnumOptions {
    std::uint64_t budget = 10'000'000;
    unsigned threads = 1;
};

struct FormulaResult {
    SymPoly poly;
    std::uint64_t term_count = 0;  // summands before collection
    std::string method;
};

/// P_lambda(X;t) as the sum over admissible pairs of
/// t^{(l(w)+l(w phi(J))-|J|)/2} (1-t)^{|J|} x^{w(mu(J))}.
FormulaResult p_alcove(const Partition& lambda, int n, const EnumOptions& opts = {});

/// Q_lambda(X;t) as the sum over F(lambda,n) of
/// t^{cinv} (1-t)^{l(lambda)+des} x^{ct}.
FormulaResult q_hhl(const Partition& lambda, int n, const EnumOptions& opts = {});

/// P_lambda(X;t) as the sum over Fhat(lambda,n) of t^{cinv} (1-t)^{des} x^{ct}.
FormulaResult p_fillings(const Partition& lambda, int n, const EnumOptions& opts = {});

/// Exact division of Q by (1-t)^{l(lambda)} prod_i [m_i]_t!.
SymPoly p_from_q(const SymPoly& q, const Partition& lambda, int n);

/// Schur polynomial via semistandard Young tableaux with entries <= n.
SymPoly schur_ssyt(const Partition& lambda, int n);
/// Monomial symmetric polynomial: distinct rearrangements of lambda padded.
SymPoly monomial_sym(const Partition& lambda, int n);

/// Sets t to the given integer value in every coefficient.
SymPoly specialize_t(const SymPoly& p, int t);

struct CompressionGroupFailure {
    Filling filling;
    TPoly collected;
    TPoly expected;
};

struct CompressionReport {
    bool pass = false;
    std::uint64_t pair_count = 0;     // admissible pairs (terms pre-collection)
    std::uint64_t filling_count = 0;  // t(lambda) = |F(lambda,n)|
    std::vector<CompressionGroupFailure> failures;
    std::vector<Filling> missed_fillings;  // sigma with empty fiber
    /// Compression factor as exact rational and as half-up one-decimal text.
    std::uint64_t factor_num = 0, factor_den = 0;
    std::string factor_rounded;
};

/// Groups A(lambda) by the filling map and checks each group against
/// t^{cinv(sigma)} (1-t)^{des(sigma)}; requires n-1 distinct non-zero parts.
CompressionReport compression_report(const Partition& lambda, int n,
                                     const EnumOptions& opts = {});

/// Half-up rounding of num/den to one decimal, e.g. "2.9".
std::string round_one_decimal(std::uint64_t num, std::uint64_t den);

struct TableRow {
    std::uint64_t pairs = 0;     // terms of Schwer's formula over S_n^lambda
    std::uint64_t fillings = 0;  // t(lambda) = |F(lambda,n)|
    std::string factor;          // c(lambda), one decimal
};

/// The raw counts behind the compression table; makes no regularity
/// assumption on lambda.
TableRow table_row(const Partition& lambda, int n, const EnumOptions& opts = {});

struct VerifyResult {
    bool pass = true;
    std::vector<std::string> failures;
    void fail(std::string msg) {
        pass = false;
        failures.push_back(std::move(msg));
    }
};

/// p_alcove == p_fillings == p_from_q(q_hhl), exactly.
VerifyResult verify_cross(const Partition& lambda, int n, const EnumOptions& opts = {});
/// P at t=0 equals the SSYT Schur oracle; at t=1 the monomial oracle.
VerifyResult verify_specialize(const Partition& lambda, int n, const EnumOptions& opts = {});
/// Folded levels m_k equal N_c(sigma[q]) - N_d(sigma[q]) on every pair.
VerifyResult verify_levels(const Partition& lambda, int n);
/// The four segment-sum identities, exhaustively for the given n over all
/// permutations and all k, p with k + p <= n (plus small shapes for the
/// fiber identity).
VerifyResult verify_segments(int n);

}  // namespace hlkit
