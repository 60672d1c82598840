#include "hlkit/chains.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hlkit {

std::vector<int> affine_reflect(const AffineReflection& r, std::vector<int> mu) {
    int a = r.root.a, b = r.root.b;
    if (a < 1 || b > static_cast<int>(mu.size()) || a >= b)
        throw std::invalid_argument("affine_reflect: root out of range");
    int ma = mu[a - 1], mb = mu[b - 1];
    mu[a - 1] = mb + r.level;
    mu[b - 1] = ma - r.level;
    return mu;
}

std::vector<Transposition> omega_chain(int k, int n) {
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("omega_chain: requires 1 <= k <= n-1");
    std::vector<Transposition> out;
    out.reserve(static_cast<std::size_t>(k) * (n - k));
    for (int i = 1; i <= k; ++i)
        for (int b = n; b >= k + 1; --b) out.push_back({i, b});
    return out;
}

LambdaChain LambdaChain::lambda_chain(const Partition& lambda, int n) {
    if (static_cast<int>(lambda.length()) > n - 1)
        throw std::invalid_argument("lambda_chain: more than n-1 non-zero parts");
    LambdaChain c;
    c.lambda_ = lambda;
    c.n_ = n;
    Partition conj = lambda.conjugate();
    for (int p = lambda.first(); p >= 1; --p) {
        auto seg = omega_chain(conj.part(p), n);
        for (const auto& t : seg) {
            c.entries_.push_back(t);
            c.column_.push_back(p);
        }
    }
    std::map<Transposition, int> seen;
    c.level_.reserve(c.entries_.size());
    for (const auto& t : c.entries_) c.level_.push_back(++seen[t]);
    c.to_reversed_.resize(c.entries_.size());
    std::iota(c.to_reversed_.begin(), c.to_reversed_.end(), 1);
    c.from_reversed_ = c.to_reversed_;
    return c;
}

LambdaChain LambdaChain::reversed() const {
    if (orientation_ != ChainOrientation::forward)
        throw std::logic_error("reversed: expects a forward chain");
    LambdaChain c = *this;
    c.orientation_ = ChainOrientation::reversed;
    std::reverse(c.entries_.begin(), c.entries_.end());
    std::reverse(c.column_.begin(), c.column_.end());
    std::reverse(c.level_.begin(), c.level_.end());
    return c;
}

LambdaChain LambdaChain::reversed_reordered(int j) const {
    if (orientation_ != ChainOrientation::forward)
        throw std::logic_error("reversed_reordered: expects a forward chain");
    Partition conj = lambda_.conjugate();
    if (j < 1 || j > n_ - 1)
        throw std::invalid_argument("reversed_reordered: row index out of range");
    LambdaChain rev = reversed();
    LambdaChain c;
    c.lambda_ = lambda_;
    c.n_ = n_;
    c.orientation_ = ChainOrientation::reversed_reordered;
    c.reorder_j_ = j;
    int pos = 0;  // 0-based cursor into rev
    for (int p = 1; p <= lambda_.first(); ++p) {
        int k = conj.part(p);
        int seg_len = k * (n_ - k);
        if (p <= lambda_.part(j)) {
            // column-major variant: (k,c),(k-1,c),...,(1,c) for c = k+1..n
            std::map<Transposition, int> rev_pos;  // -> 1-based position in rev
            for (int q = 0; q < seg_len; ++q)
                rev_pos[rev.entries_[pos + q]] = pos + q + 1;
            for (int col = k + 1; col <= n_; ++col)
                for (int a = k; a >= 1; --a) {
                    Transposition t{a, col};
                    c.entries_.push_back(t);
                    c.column_.push_back(p);
                    int rp = rev_pos.at(t);
                    c.to_reversed_.push_back(rp);
                    c.level_.push_back(rev.level_[rp - 1]);
                }
        } else {
            for (int q = 0; q < seg_len; ++q) {
                c.entries_.push_back(rev.entries_[pos + q]);
                c.column_.push_back(p);
                c.to_reversed_.push_back(pos + q + 1);
                c.level_.push_back(rev.level_[pos + q]);
            }
        }
        pos += seg_len;
    }
    c.from_reversed_.resize(c.to_reversed_.size());
    for (std::size_t i = 0; i < c.to_reversed_.size(); ++i)
        c.from_reversed_[c.to_reversed_[i] - 1] = static_cast<int>(i) + 1;
    return c;
}

std::string LambdaChain::to_string() const {
    std::ostringstream os;
    for (int pos = 1; pos <= size(); ++pos) {
        if (pos > 1 && column_of(pos) != column_of(pos - 1)) os << "|";
        os << "(" << entry(pos).a << "," << entry(pos).b << ")";
    }
    return os.str();
}

std::vector<Transposition> segment_gamma(int k, int p, int n) {
    auto g = omega_chain(k, n);
    if (p < 0 || p > static_cast<int>(g.size()))
        throw std::invalid_argument("segment_gamma: bad prefix length");
    return {g.begin() + p, g.end()};
}

std::vector<Transposition> segment_gamma_r(int k, int p, int n) {
    auto g = omega_chain(k, n);
    std::reverse(g.begin(), g.end());
    if (p < 0 || p > static_cast<int>(g.size()))
        throw std::invalid_argument("segment_gamma_r: bad prefix length");
    return {g.begin() + p, g.end()};
}

std::vector<Transposition> segment_gamma_r_row(int k, int i, int n) {
    std::vector<Transposition> out;
    for (int b = k + 1; b <= n; ++b) out.push_back({i, b});
    return out;
}

}  // namespace hlkit
