#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hlkit {

/// Sequence of positive integers (permutation words, filling columns, w[i,j]).
using IntSequence = std::vector<int>;

/// Number of pairs i<j with s[i] > s[j].
int inversions(const IntSequence& s);

/// Number of entries strictly less than a.
int count_below(const IntSequence& s, int a);
/// Number of entries strictly between a and b (requires a <= b).
int count_between(const IntSequence& s, int a, int b);

/// Partition with weakly decreasing non-negative parts (trailing zeros are
/// trimmed on construction).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition parse(const std::string& comma_list);

    const std::vector<int>& parts() const { return parts_; }
    /// 1-based part accessor; zero beyond the length.
    int part(std::size_t i) const {
        return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
    }
    std::size_t length() const { return parts_.size(); }
    int size() const;                     // |lambda|
    int weighted_size() const;            // n(lambda) = sum (i-1) lambda_i
    Partition conjugate() const;
    bool empty() const { return parts_.empty(); }
    /// Largest part (0 for the empty partition).
    int first() const { return parts_.empty() ? 0 : parts_[0]; }
    /// True when all non-zero parts are distinct (the regular case, where the
    /// stabilizer blocks below the zero block are singletons).
    bool has_distinct_parts() const;
    /// lambda padded with zeros to length n.
    std::vector<int> padded(std::size_t n) const;
    /// Maximal intervals [a,b] (1-based, inclusive) of equal parts among rows
    /// 1..n, including the trailing zero block.
    std::vector<std::pair<int, int>> equal_part_blocks(std::size_t n) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// Permutation of [n] in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);
    static Permutation identity(std::size_t n);
    static Permutation parse(const std::string& s);

    std::size_t size() const { return word_.size(); }
    int operator()(int i) const { return word_[i - 1]; }  // 1-based
    const std::vector<int>& word() const { return word_; }
    Permutation inverse() const;
    int length() const { return inversions(word_); }

    /// Right multiplication by the transposition (a,b): swaps positions a, b.
    Permutation apply_transposition(int a, int b) const;
    void apply_transposition_inplace(int a, int b) {
        std::swap(word_[a - 1], word_[b - 1]);
    }
    /// Sign test for the Bruhat step: l(w (a,b)) < l(w) iff w(a) > w(b).
    bool drops(int a, int b) const { return word_[a - 1] > word_[b - 1]; }

    /// Position-permuting action on vectors: (w.v)_i = v_{w^{-1}(i)}.
    std::vector<int> act(const std::vector<int>& v) const;

    /// Subword w(i)..w(j), 1-based inclusive.
    IntSequence subword(int i, int j) const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;
    std::string to_string() const;

private:
    std::vector<int> word_;
};

/// Lowest coset representative of w W_lambda: entries sorted increasingly
/// within each maximal block of equal lambda-parts (the trailing zero block
/// included).
Permutation min_coset_rep(const Permutation& w, const Partition& lambda);

/// All minimal coset representatives in S_n / W_lambda, in lexicographic
/// one-line order.
std::vector<Permutation> min_coset_reps(const Partition& lambda, std::size_t n);

/// All n! permutations in lexicographic one-line order.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace hlkit
