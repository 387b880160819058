#pragma once

#include "dla/classify.hpp"
#include "dla/diagram.hpp"
#include "dla/exhaustions.hpp"
#include "dla/numeric.hpp"
#include "dla/steinitz.hpp"

#include <string>
#include <vector>

namespace dla {

/// Builds a commutative-ladder witness for an embedding that embeds()
/// answered Yes through one of the constructive recipes: the identity
/// ladder, the one-sided recipe (x, 0), the symmetric recipe (q, q) under
/// the doubled margin, the infinite-R2 / infinite-S recipe, the sparse
/// target recipe, and their cross-type variants.  Target levels are chosen
/// minimally subject to divisibility and the dimension bound.
///
/// Throws NotEmbeddable when the decision is No or Unknown and
/// UnsupportedConstruction when the decision is Yes through a branch that
/// would require re-signaturing the given exhaustions.
EmbeddingDiagram build_diagram(const ExhaustionDescriptor& d1, const ExhaustionDescriptor& d2,
                               std::size_t depth);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Checks the commutativity conditions (index and c-index products, the
/// dimension bound) at every level, the cross-type parity clauses, and the
/// dimension parities of types C/O.
VerifyReport verify_diagram(const EmbeddingDiagram& diag);

/// Finite-depth index divisibility: down each rung, the source index
/// product divides (x_0+y_0) times the target index product.
bool index_divisibility_check(const AlgebraProfile& p1, const AlgebraProfile& p2,
                              const EmbeddingDiagram& witness, std::size_t depth);

/// The exterior-power triangle for an infinite Steinitz target.
/// q >= 4 runs the geometric-series construction with exact rationals;
/// q = 2 or 3 requires the target to be exactly q^inf and uses b_k = q^-k.
Triangle build_triangle(const BigInt& q, const SteinitzNumber& target, std::size_t depth);
Triangle build_triangle(const BigInt& q, const ExhaustionDescriptor& target, std::size_t depth);

/// Per-level exterior-power decompositions of the natural modules along
/// the ladder sl(k) -> sl(n_1...n_k) encoded by the triangle.
ExteriorLadder triangle_to_diagram(const Triangle& t);

/// Structural re-validation of a triangle (the row recurrence, the
/// binomial dimension identity, grid membership of the b's, sum bound,
/// nonnegative iterated differences, and the epsilon bounds when q >= 4).
VerifyReport verify_triangle(const Triangle& t);

// Text formats (round-trip through the verifier).
std::string diagram_to_string(const EmbeddingDiagram& d);
EmbeddingDiagram parse_diagram(const std::string& text);
std::string triangle_to_string(const Triangle& t);
Triangle parse_triangle(const std::string& text);

}  // namespace dla
