#include "hlkit/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hlkit {

int inversions(const IntSequence& s) {
    int inv = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) ++inv;
    return inv;
}

int count_below(const IntSequence& s, int a) {
    return static_cast<int>(std::count_if(s.begin(), s.end(),
                                          [a](int x) { return x < a; }));
}

int count_between(const IntSequence& s, int a, int b) {
    if (a > b) throw std::invalid_argument("count_between: requires a <= b");
    return static_cast<int>(std::count_if(
        s.begin(), s.end(), [a, b](int x) { return a < x && x < b; }));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must weakly decrease");
    if (!parts_.empty() && parts_.back() < 0)
        throw std::invalid_argument("Partition: parts must be non-negative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& comma_list) {
    std::vector<int> parts;
    std::stringstream ss(comma_list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) parts.push_back(std::stoi(item));
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::weighted_size() const {
    int r = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        r += static_cast<int>(i) * parts_[i];
    return r;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition{};
    std::vector<int> conj(parts_[0]);
    for (int j = 1; j <= parts_[0]; ++j)
        conj[j - 1] = static_cast<int>(std::count_if(
            parts_.begin(), parts_.end(), [j](int p) { return p >= j; }));
    return Partition(std::move(conj));
}

bool Partition::has_distinct_parts() const {
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] == parts_[i + 1]) return false;
    return true;
}

std::vector<int> Partition::padded(std::size_t n) const {
    std::vector<int> v(n, 0);
    for (std::size_t i = 0; i < parts_.size() && i < n; ++i) v[i] = parts_[i];
    return v;
}

std::vector<std::pair<int, int>> Partition::equal_part_blocks(std::size_t n) const {
    std::vector<std::pair<int, int>> blocks;
    int a = 1;
    for (int i = 2; i <= static_cast<int>(n); ++i) {
        if (part(i) != part(a)) {
            blocks.emplace_back(a, i - 1);
            a = i;
        }
    }
    blocks.emplace_back(a, static_cast<int>(n));
    return blocks;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int x : word_) {
        if (x < 1 || x > static_cast<int>(word_.size()) || seen[x - 1])
            throw std::invalid_argument("Permutation: not a bijection on [n]");
        seen[x - 1] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& s) {
    std::vector<int> w;
    w.reserve(s.size());
    for (char c : s) {
        if (c < '1' || c > '9')
            throw std::invalid_argument("Permutation: expected digits 1..9");
        w.push_back(c - '0');
    }
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) inv[word_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::apply_transposition(int a, int b) const {
    Permutation r = *this;
    r.apply_transposition_inplace(a, b);
    return r;
}

std::vector<int> Permutation::act(const std::vector<int>& v) const {
    if (v.size() != word_.size())
        throw std::invalid_argument("Permutation::act: length mismatch");
    std::vector<int> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[word_[i] - 1] = v[i];
    return r;
}

IntSequence Permutation::subword(int i, int j) const {
    if (i < 1) i = 1;
    if (j > static_cast<int>(word_.size())) j = static_cast<int>(word_.size());
    if (j < i) return {};
    return IntSequence(word_.begin() + (i - 1), word_.begin() + j);
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (word_.size() > 9 && i) os << ".";
        os << word_[i];
    }
    return os.str();
}

Permutation min_coset_rep(const Permutation& w, const Partition& lambda) {
    std::vector<int> word = w.word();
    for (auto [a, b] : lambda.equal_part_blocks(word.size()))
        std::sort(word.begin() + (a - 1), word.begin() + b);
    return Permutation(std::move(word));
}

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<Permutation> min_coset_reps(const Partition& lambda, std::size_t n) {
    auto blocks = lambda.equal_part_blocks(n);
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(n)) {
        bool minimal = true;
        for (auto [a, b] : blocks)
            for (int i = a; i < b && minimal; ++i)
                if (w(i) > w(i + 1)) minimal = false;
        if (minimal) out.push_back(w);
    }
    return out;
}

}  // namespace hlkit
