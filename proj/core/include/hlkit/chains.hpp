#pragma once

#include <string>
#include <vector>

#include "hlkit/combinatorics.hpp"

namespace hlkit {

/// Root / reflection (a,b) with a < b, doubling as the transposition of
/// positions a and b.
struct Transposition {
    int a = 0, b = 0;
    bool operator==(const Transposition&) const = default;
    auto operator<=>(const Transposition&) const = default;
    /// True in the order (a,b) < (c,d) iff a < c, or a = c and b > d.
    bool precedes(const Transposition& o) const {
        return a < o.a || (a == o.a && b > o.b);
    }
};

/// Reflection in the affine hyperplane { mu : mu_a - mu_b = level }.
struct AffineReflection {
    Transposition root;
    int level = 0;
};

/// Coordinates a, b of mu become (mu_b + l, mu_a - l); an involution that
/// preserves the coordinate sum.
std::vector<int> affine_reflect(const AffineReflection& r, std::vector<int> mu);

/// The omega_k-chain: rows (i,n),(i,n-1),...,(i,k+1) for i = 1..k.
std::vector<Transposition> omega_chain(int k, int n);

enum class ChainOrientation { forward, reversed, reversed_reordered };

/// A lambda-chain (or a reversed / reversed-reordered variant) with
/// per-position column tags and hyperplane levels l_k.
class LambdaChain {
public:
    static LambdaChain lambda_chain(const Partition& lambda, int n);

    /// rev(Gamma) = Gamma^r_1 ... Gamma^r_{lambda_1}.
    LambdaChain reversed() const;
    /// rev(Gamma)_j: the first lambda_j factors of rev(Gamma) replaced by the
    /// column-major variants. Positions carry a correspondence to rev(Gamma)
    /// (pairs related by swaps of commuting transpositions).
    LambdaChain reversed_reordered(int j) const;

    const Partition& lambda() const { return lambda_; }
    int n() const { return n_; }
    ChainOrientation orientation() const { return orientation_; }
    int reorder_row() const { return reorder_j_; }

    int size() const { return static_cast<int>(entries_.size()); }
    /// 1-based position access.
    const Transposition& entry(int pos) const { return entries_[pos - 1]; }
    /// Column index p of the segment Gamma_p containing the position.
    int column_of(int pos) const { return column_[pos - 1]; }
    /// l_k: occurrences of the root among positions 1..k of the forward chain.
    int level_of(int pos) const { return level_[pos - 1]; }
    /// For reordered variants: the corresponding position in rev(Gamma)
    /// (identity map on reversed chains).
    int position_in_reversed(int pos) const { return to_reversed_[pos - 1]; }
    /// Inverse of position_in_reversed.
    int position_from_reversed(int rev_pos) const { return from_reversed_[rev_pos - 1]; }

    const std::vector<Transposition>& entries() const { return entries_; }

    /// "(1,4)(1,3)(1,2)|(1,4)(1,3)(2,4)(2,3)" with bars between segments.
    std::string to_string() const;

private:
    Partition lambda_;
    int n_ = 0;
    ChainOrientation orientation_ = ChainOrientation::forward;
    int reorder_j_ = 0;
    std::vector<Transposition> entries_;
    std::vector<int> column_;
    std::vector<int> level_;
    std::vector<int> to_reversed_;
    std::vector<int> from_reversed_;
};

/// Gamma(k,p): the omega_k-chain with its first p entries removed.
std::vector<Transposition> segment_gamma(int k, int p, int n);
/// Gamma^r(k,p): the reversed omega_k-chain with its first p entries removed.
std::vector<Transposition> segment_gamma_r(int k, int p, int n);
/// Gamma^r_i(k) = ((i,k+1),(i,k+2),...,(i,n)).
std::vector<Transposition> segment_gamma_r_row(int k, int i, int n);

}  // namespace hlkit
