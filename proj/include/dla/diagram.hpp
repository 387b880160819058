#pragma once

#include "dla/exhaustions.hpp"
#include "dla/numeric.hpp"

#include <vector>

namespace dla {

/// One rung of a commutative ladder: source level i maps into target
/// level k with signature (x, y, u), u = m_k - (x+y) n_i.
struct DiagramLevel {
    std::size_t source_level = 0;
    std::size_t target_level = 0;
    BigInt x, y, u;

    bool operator==(const DiagramLevel&) const = default;
};

/// Finite-depth witness of an embedding between two described exhaustions.
struct EmbeddingDiagram {
    ExhaustionDescriptor source;
    ExhaustionDescriptor target;
    std::vector<DiagramLevel> levels;  // target_level strictly increasing

    bool operator==(const EmbeddingDiagram&) const = default;
};

/// The exterior-power construction: rows a_i^k with
/// a_i^k + a_{i+1}^k = n_k a_i^{k-1}, plus the generating data b_k, eps_k.
struct Triangle {
    BigInt q;                          // geometric base (>= 4, or the constant-n case)
    std::vector<BigInt> group_sizes;   // n_1 .. n_K
    std::vector<std::vector<BigInt>> rows;  // rows[k] = (a_0^k .. a_k^k), k = 0..K
    std::vector<Rational> b;           // b_1 .. b_K
    std::vector<Rational> eps;         // eps_1 .. eps_K
};

/// Module decomposition ladder sl(k) -> sl(n_1...n_k): multiplicity
/// mults[i] on the i-th exterior power of the natural module.
struct ExteriorLadderLevel {
    std::size_t k = 0;
    BigInt dim;                    // n_1 ... n_k
    std::vector<BigInt> mults;     // size k+1
};

struct ExteriorLadder {
    std::vector<ExteriorLadderLevel> levels;
};

}  // namespace dla
