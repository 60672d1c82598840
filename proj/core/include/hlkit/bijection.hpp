#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hlkit/chains.hpp"
#include "hlkit/walks.hpp"

namespace hlkit {

/// Side L: wT in S_n^lambda; side R: w in S_n^lambda. Both with T_1 empty.
enum class BijectionSide { L, R };
enum class PhiDirection { L_to_R, R_to_L };

/// The single-row bijection phi_j between A_j^L and A_j^R, on rev(Gamma)_j
/// coordinates (the chain must be reversed_reordered(j)). Requires
/// lambda_j = lambda_{j+1}. R_to_L scans left to right splitting T' at start
/// markers and their complementary end markers; L_to_R is the inverse
/// right-to-left scan. Throws std::domain_error when the input violates the
/// side invariants.
AdmissiblePair phi_j(const LambdaChain& chain_j, const AdmissiblePair& pair,
                     PhiDirection dir);

/// The composed bijection A^L <-> A^R on rev(Gamma) coordinates. L_to_R sorts
/// the start permutation block by block, top to bottom, always swapping at the
/// first descent; R_to_L sorts the end permutation bottom to top, swapping at
/// the position of the largest descent top. Each swap is a phi_j step, applied
/// through the position correspondence with rev(Gamma)_j.
AdmissiblePair full_bijection(const LambdaChain& rev_chain,
                              const AdmissiblePair& pair, PhiDirection dir);

struct BijectionReport {
    bool pass = false;
    std::uint64_t size_l = 0, size_r = 0;
    std::vector<std::string> failures;
    std::string to_json_string() const;
};

/// Enumerates A^L and A^R on rev(Gamma), applies full_bijection both ways and
/// checks bijectivity, the round trip, u = lowest coset rep of w, |V| = |T|,
/// content preservation, and N(w,T) = N(u,V) - (l(w) - l(u)).
BijectionReport bijection_report(const Partition& lambda, int n);

}  // namespace hlkit
