#pragma once

#include "dla/exhaustions.hpp"
#include "dla/numeric.hpp"

#include <map>
#include <vector>

namespace dla {

/// Highest weight of an irreducible sl(n)-module: weakly decreasing
/// nonnegative integers.  Two weights name isomorphic modules exactly when
/// their consecutive-difference vectors agree.
struct HighestWeight {
    std::vector<int> entries;

    std::size_t rank() const { return entries.size(); }
    int size() const;  // |lambda|
    bool is_valid() const;
    /// Same module class: equal rank and equal difference vectors.
    bool same_module(const HighestWeight& o) const;

    bool operator==(const HighestWeight& o) const = default;
    bool operator<(const HighestWeight& o) const { return entries < o.entries; }
};

/// Multiplicity map of a restricted module.
struct BranchingResult {
    std::map<HighestWeight, BigInt> multiplicities;
    std::size_t ambient_rank = 0;
    std::size_t target_rank = 0;

    BigInt total_dimension() const;
};

/// Weyl dimension formula: prod_{i<j} (l_i - l_j + j - i)/(j - i).
BigInt weyl_dim(const HighestWeight& w);

/// Gelfand-Tsetlin rule for sl(n) in sl(n+1) of signature (1,0,1):
/// all interlacing weights, multiplicity one each.
BranchingResult gt_branch(const HighestWeight& w);

/// Littlewood-Richardson coefficient c^lambda_{mu nu} by the tableau rule
/// (lattice-word fillings of lambda/mu with content nu).
BigInt lr_coefficient(const HighestWeight& mu, const HighestWeight& nu,
                      const HighestWeight& lambda);

/// Generalized coefficient c^lambda_{mu_1...mu_k}: iterated composition,
/// independent of the order of the mu's.
BigInt generalized_lr(const std::vector<HighestWeight>& mus, const HighestWeight& lambda);

/// Restriction along the diagonal sl(n) in sl(kn) of signature (k,0,0):
/// mult(nu) = sum over k-tuples of products of generalized LR coefficients.
BranchingResult restrict_diagonal(const HighestWeight& lambda, std::size_t k, std::size_t n);

/// How one ambient weight coordinate restricts: +e_j, -e_j, or 0.
struct WeightLabel {
    int target_index = 0;  // 0-based; ignored when sign == 0
    int sign = 0;          // +1, -1, 0
};

/// Brute-force character oracle: push the ambient weight multiset through
/// the label map, then strip highest weights repeatedly.  Exact and
/// independent of the GT/LR code paths (characters come from semistandard
/// tableau enumeration).  Guards: target rank <= 6, dimension <= 5000.
BranchingResult decompose_by_characters(const std::map<std::vector<int>, BigInt>& module_weights,
                                        std::size_t target_rank,
                                        const std::vector<WeightLabel>& weight_map);

/// Character of F^lambda as a weight multiset (semistandard tableaux).
std::map<std::vector<int>, BigInt> character_multiset(const HighestWeight& lambda);

/// Oracle-path restriction of F^lambda along an arbitrary diagonal
/// signature (l, r, z) with rank(lambda) = (l+r)*n + z.
BranchingResult restrict_along_signature(const HighestWeight& lambda, const SignatureTriple& sig,
                                         std::size_t n);

/// Restrict every constituent of a BranchingResult one more step.
BranchingResult restrict_further(const BranchingResult& b, const SignatureTriple& sig,
                                 std::size_t n);

/// Dynkin index of the module: (dim U / dim s) * <lambda, lambda + 2 rho>
/// in the normalization <alpha, alpha^vee> = 2 for long roots.
Rational dynkin_index_module(const HighestWeight& w);

/// Index of a diagonal inclusion of signature (l, r, z): l + r.
BigInt index_of_signature(const SignatureTriple& sig);

/// Max over appearing weights of (first entry - last entry).
int d_of(const BranchingResult& b);

}  // namespace dla
