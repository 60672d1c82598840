#include "hlkit/walks.hpp"

#include <algorithm>
#include <stdexcept>

namespace hlkit {

namespace {

struct SubsetDfs {
    const std::vector<Transposition>& seq;
    bool decreasing;
    const std::function<void(const std::vector<int>&, const Permutation&)>& fn;
    std::vector<int> taken;
    Permutation cur;

    void run(std::size_t pos) {
        if (pos == seq.size()) {
            fn(taken, cur);
            return;
        }
        run(pos + 1);  // skip first
        const auto& t = seq[pos];
        if (cur.drops(t.a, t.b) == decreasing) {
            taken.push_back(static_cast<int>(pos) + 1);
            cur.apply_transposition_inplace(t.a, t.b);
            run(pos + 1);
            cur.apply_transposition_inplace(t.a, t.b);
            taken.pop_back();
        }
    }
};

}  // namespace

void for_each_admissible_subset(
    const std::vector<Transposition>& seq, const Permutation& start,
    WalkOrientation orientation,
    const std::function<void(const std::vector<int>&, const Permutation&)>& fn) {
    SubsetDfs dfs{seq, orientation == WalkOrientation::decreasing, fn, {}, start};
    dfs.taken.reserve(seq.size());
    dfs.run(0);
}

void for_each_admissible(
    const LambdaChain& chain, WalkOrientation orientation,
    const Permutation& start,
    const std::function<void(const AdmissiblePair&, const Permutation&)>& fn) {
    for_each_admissible_subset(
        chain.entries(), start, orientation,
        [&](const std::vector<int>& positions, const Permutation& end) {
            fn(AdmissiblePair{start, positions}, end);
        });
}

void for_each_admissible(
    const LambdaChain& chain, WalkOrientation orientation, CosetChoice coset,
    const std::function<void(const AdmissiblePair&, const Permutation&)>& fn) {
    auto starts = coset == CosetChoice::w_lambda_min
                      ? min_coset_reps(chain.lambda(), chain.n())
                      : all_permutations(chain.n());
    for (const auto& w : starts) for_each_admissible(chain, orientation, w, fn);
}

std::vector<Transposition> subsequence(const LambdaChain& chain,
                                       const std::vector<int>& positions) {
    std::vector<Transposition> out;
    out.reserve(positions.size());
    for (int p : positions) out.push_back(chain.entry(p));
    return out;
}

SubsetEvaluation evaluate_subset(const LambdaChain& chain,
                                 const AdmissiblePair& pair) {
    if (chain.orientation() != ChainOrientation::forward)
        throw std::logic_error("evaluate_subset: expects a forward chain");
    std::vector<int> mu = chain.lambda().padded(chain.n());
    // rightmost reflection applied first
    for (auto it = pair.positions.rbegin(); it != pair.positions.rend(); ++it)
        mu = affine_reflect({chain.entry(*it), chain.level_of(*it)}, std::move(mu));
    Permutation end = pair.w;
    for (int p : pair.positions)
        end.apply_transposition_inplace(chain.entry(p).a, chain.entry(p).b);
    return SubsetEvaluation{end, mu, pair.w.act(mu)};
}

namespace {

/// Runs the filling map on (w0, T) where T is given in forward-chain order
/// together with forward column tags (descending, lambda_1 first).
Filling filling_from(const Permutation& w0,
                     const std::vector<std::pair<int, Transposition>>& tagged,
                     const Partition& lambda) {
    Partition conj = lambda.conjugate();
    std::vector<IntSequence> cols(lambda.first());
    Permutation cur = w0;
    std::size_t idx = 0;
    for (int j = lambda.first(); j >= 1; --j) {
        // column j = first lambda'_j entries of pi_j
        cols[j - 1] = cur.subword(1, conj.part(j));
        while (idx < tagged.size() && tagged[idx].first == j) {
            cur.apply_transposition_inplace(tagged[idx].second.a,
                                            tagged[idx].second.b);
            ++idx;
        }
    }
    return Filling(lambda, std::move(cols));
}

}  // namespace

Filling filling_map(const LambdaChain& chain, const AdmissiblePair& pair,
                    FillingMode mode) {
    const Partition& lambda = chain.lambda();
    if (mode == FillingMode::f) {
        if (chain.orientation() != ChainOrientation::forward)
            throw std::logic_error("filling_map: mode f expects a forward chain");
        std::vector<std::pair<int, Transposition>> tagged;
        tagged.reserve(pair.positions.size());
        for (int p : pair.positions)
            tagged.emplace_back(chain.column_of(p), chain.entry(p));
        return filling_from(pair.w, tagged, lambda);
    }
    if (chain.orientation() == ChainOrientation::forward)
        throw std::logic_error("filling_map: mode f_reverse expects a reversed chain");
    // f^r(w,T) = f(wT, rev(T))
    Permutation end = pair.w;
    for (int p : pair.positions)
        end.apply_transposition_inplace(chain.entry(p).a, chain.entry(p).b);
    // rev(T) in forward order = chosen entries by descending rev(Gamma) position
    std::vector<std::pair<int, int>> by_rev;  // (rev position, chain position)
    by_rev.reserve(pair.positions.size());
    for (int p : pair.positions) by_rev.emplace_back(chain.position_in_reversed(p), p);
    std::sort(by_rev.rbegin(), by_rev.rend());
    std::vector<std::pair<int, Transposition>> tagged;
    tagged.reserve(by_rev.size());
    for (auto [rp, p] : by_rev)
        tagged.emplace_back(chain.column_of(p), chain.entry(p));
    return filling_from(end, tagged, lambda);
}

int n_stat(const Permutation& w, const std::vector<Transposition>& T) {
    Permutation cur = w;
    int total = 0;
    for (const auto& t : T) {
        cur.apply_transposition_inplace(t.a, t.b);
        int c = std::min(cur(t.a), cur(t.b));
        int d = std::max(cur(t.a), cur(t.b));
        total += count_between(cur.subword(t.a, t.b), c, d);
    }
    return total;
}

FoldedHyperplane folded_hyperplane_level(const LambdaChain& chain,
                                         const AdmissiblePair& pair, int k) {
    if (chain.orientation() != ChainOrientation::forward)
        throw std::logic_error("folded_hyperplane_level: expects a forward chain");
    if (k < 1 || k > chain.size())
        throw std::invalid_argument("folded_hyperplane_level: position out of range");
    // Affine image g = w rhat_{j_1} ... rhat_{j_i} tracked as (pi, v):
    // g(x) = pi(x) + v, where appending rhat_{(a,b),l} updates
    // v += l * (e_{pi(a)} - e_{pi(b)}) and pi *= (a,b).
    Permutation pi = pair.w;
    std::vector<int> v(chain.n(), 0);
    for (int p : pair.positions) {
        if (p >= k) break;
        const auto& t = chain.entry(p);
        v[pi(t.a) - 1] += chain.level_of(p);
        v[pi(t.b) - 1] -= chain.level_of(p);
        pi.apply_transposition_inplace(t.a, t.b);
    }
    const auto& beta = chain.entry(k);
    int c = pi(beta.a), d = pi(beta.b);
    // transport x = l_k * e_a: (g x)_c = l_k + v_c, (g x)_d = v_d
    int m = chain.level_of(k) + v[c - 1] - v[d - 1];
    return FoldedHyperplane{c, d, m};
}

}  // namespace hlkit
