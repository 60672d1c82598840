#pragma once

#include <functional>
#include <vector>

#include "hlkit/chains.hpp"
#include "hlkit/combinatorics.hpp"
#include "hlkit/fillings.hpp"

namespace hlkit {

enum class WalkOrientation { decreasing, increasing };

/// Admissible pair (w, J): start permutation plus the sorted chain positions
/// where the walk folds. The chain and orientation travel alongside; the
/// transposition subsequence T is derived on demand.
struct AdmissiblePair {
    Permutation w;
    std::vector<int> positions;  // 1-based, strictly increasing
};

/// DFS over the positions of a transposition sequence. At each position the
/// "skip" branch is explored before "take"; "take" requires a strict Bruhat
/// drop (decreasing) or rise (increasing) of the running permutation. Calls
/// fn once per admissible subset with the subset and the end permutation.
void for_each_admissible_subset(
    const std::vector<Transposition>& seq, const Permutation& start,
    WalkOrientation orientation,
    const std::function<void(const std::vector<int>&, const Permutation&)>& fn);

enum class CosetChoice { w_lambda_min, all_w };

/// Enumerates admissible pairs on a lambda-chain over all start permutations
/// given by the coset choice (or a single fixed start), in lexicographic
/// start order.
void for_each_admissible(
    const LambdaChain& chain, WalkOrientation orientation, CosetChoice coset,
    const std::function<void(const AdmissiblePair&, const Permutation&)>& fn);
void for_each_admissible(
    const LambdaChain& chain, WalkOrientation orientation,
    const Permutation& start,
    const std::function<void(const AdmissiblePair&, const Permutation&)>& fn);

/// Transposition subsequence indexed by the pair's positions.
std::vector<Transposition> subsequence(const LambdaChain& chain,
                                       const std::vector<int>& positions);

struct SubsetEvaluation {
    Permutation end;            // w phi(J)
    std::vector<int> mu;        // mu(J), length n
    std::vector<int> weight;    // w(mu(J))
};

/// phi(J), mu(J) and the walk weight w(mu(J)) for a pair on a forward chain.
SubsetEvaluation evaluate_subset(const LambdaChain& chain,
                                 const AdmissiblePair& pair);

enum class FillingMode { f, f_reverse };

/// The filling map. Mode f expects a forward chain (decreasing pairs);
/// f_reverse expects a reversed or reversed-reordered chain (increasing
/// pairs) and delegates to f(wT, rev(T)).
Filling filling_map(const LambdaChain& chain, const AdmissiblePair& pair,
                    FillingMode mode);

/// N(w,T) = sum_i N_{c_i d_i}(w_i[a_i, b_i]).
int n_stat(const Permutation& w, const std::vector<Transposition>& T);

struct FoldedHyperplane {
    int c = 0, d = 0;  // gamma_k = (c,d), possibly c > d
    int level = 0;     // m_k
};

/// Root and level of the folded image of the k-th hyperplane of the walk:
/// w rhat_{j_1} ... rhat_{j_i} (H_{beta_k, l_k}) with i maximal, j_i < k.
FoldedHyperplane folded_hyperplane_level(const LambdaChain& chain,
                                         const AdmissiblePair& pair, int k);

}  // namespace hlkit
