#pragma once

#include "dla/numeric.hpp"
#include "dla/steinitz.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dla {

enum class AlgType { A, C, O };

std::string to_string(AlgType t);

/// Signature (l, r, z) of a diagonal inclusion: the ambient natural module
/// restricts to l copies of the natural module, r of its dual, z trivial.
/// Normalization: l >= r; r = 0 when the algebras are of type C or O.
struct SignatureTriple {
    BigInt l;
    BigInt r;
    BigInt z;

    BigInt s() const { return l + r; }
    BigInt c() const { return l - r; }

    bool operator==(const SignatureTriple& o) const = default;
};

/// Compose two stacked diagonal inclusions n1 -> n2 -> n3 into one n1 -> n3.
/// Throws DimensionMismatch unless n2 = s1*n1 + z1 and n3 = s2*n2 + z2.
SignatureTriple compose_signature(const SignatureTriple& sig1, const SignatureTriple& sig2,
                                  const BigInt& n1, const BigInt& n2, const BigInt& n3);

// Tail generators: finite presentations of the infinite part of a
// signature sequence.

struct PeriodicTail {
    std::vector<SignatureTriple> period;  // nonempty
    bool operator==(const PeriodicTail&) const = default;
};

/// Yields (p_{offset+i}, 0, 0): one copy of each prime from the offset-th on.
struct PrimeTail {
    std::uint64_t offset = 1;  // 1-based prime index, p_1 = 2
    bool operator==(const PrimeTail&) const = default;
};

/// Yields (l, r, beta*n_i) at level i: constant dimension ratio l+r+beta.
struct ProportionalTail {
    BigInt l;
    BigInt r;
    BigInt beta;
    bool operator==(const ProportionalTail&) const = default;
};

using TailGenerator = std::variant<PeriodicTail, PrimeTail, ProportionalTail>;

/// Finite description of an exhaustion: a type tag, a starting dimension,
/// finitely many explicit signatures, then a generated tail.
struct ExhaustionDescriptor {
    AlgType type = AlgType::A;
    BigInt n0 = 2;
    std::vector<SignatureTriple> prefix;
    TailGenerator tail = PeriodicTail{{SignatureTriple{2, 0, 0}}};

    bool operator==(const ExhaustionDescriptor&) const = default;
};

/// Validates the descriptor invariants: n0 >= 2, l >= r, l + r >= 1,
/// strict dimension growth, r = 0 and even dimensions where the type
/// requires them.  Throws std::invalid_argument naming the violation.
void validate(const ExhaustionDescriptor& d);

struct LevelData {
    BigInt n;        // dimension of the natural module at this level
    SignatureTriple sig;  // signature of the inclusion leaving this level
    Rational delta;  // n0 * s_0...s_{i-1} / n_i
    Rational sigma;  // prod_{j<i} c_j / s_j
};

/// Exact data of level i (0-based); O(i) walk from the start.
LevelData derive_level(const ExhaustionDescriptor& d, std::size_t i);

/// Incremental walk over levels; amortized O(1) per step.
class LevelWalker {
public:
    explicit LevelWalker(const ExhaustionDescriptor& d);
    const LevelData& current() const { return data_; }
    std::size_t index() const { return index_; }
    void advance();

private:
    const ExhaustionDescriptor* d_;
    LevelData data_;
    std::size_t index_ = 0;
    BigInt s_product_;  // s_0 ... s_{i-1}
    Rational c_over_s_; // prod_{j<i} c_j/s_j
    std::size_t period_pos_ = 0;
};

/// Stz of the sequence (n0, s_0, s_1, ...): the paper's S.
SteinitzNumber stz_S(const ExhaustionDescriptor& d);

/// Stz of (n0, c_0, c_1, ...): the paper's C.  Defined for type A with a
/// non-symmetric tail; a one-sided descriptor yields S itself (the
/// normalized exhaustion has c_i = s_i).  Finitely many prefix levels with
/// c = 0 are re-signatured to c = s, which preserves the isomorphism class.
/// Throws std::domain_error for symmetric tails and non-A types.
SteinitzNumber stz_C(const ExhaustionDescriptor& d);

enum class DensityClass { Sparse, Dense, Pure };
enum class SymmetryClass { OneSided, TwoSidedSymmetric, WeaklyNonSymmetric, StronglyNonSymmetric };

std::string to_string(DensityClass c);
std::string to_string(SymmetryClass c);

using IndexValue = std::variant<Rational, RationalInterval>;

bool is_exact(const IndexValue& v);
Rational lower_bound(const IndexValue& v);
Rational upper_bound(const IndexValue& v);
std::string to_string(const IndexValue& v);

/// Density class and the density index delta = lim n0*s_0...s_{i-1}/n_i.
/// Pure and sparse classes carry exact delta; dense tails return an
/// enclosing interval of width <= precision.
std::pair<DensityClass, IndexValue> classify_density(const ExhaustionDescriptor& d,
                                                     const Rational& precision);

/// Symmetry class and the (normalized) symmetry index sigma.
/// Generated tails realize one-sided (sigma = 1), two-sided symmetric and
/// weakly non-symmetric (sigma = 0); strongly non-symmetric data exists
/// only as certified profiles.
std::pair<SymmetryClass, Rational> classify_symmetry(const ExhaustionDescriptor& d);

/// Classification data of an algebra.
struct AlgebraProfile {
    AlgType type = AlgType::A;
    SteinitzNumber S;
    std::optional<SteinitzNumber> C;  // type A, non-symmetric only
    DensityClass density = DensityClass::Pure;
    SymmetryClass symmetry = SymmetryClass::OneSided;
    IndexValue delta = Rational(1);
    IndexValue sigma = Rational(1);
    bool finitary = false;
    /// Set when the profile came from a descriptor; enables interval
    /// refinement and exact structural-identity shortcuts.
    std::optional<ExhaustionDescriptor> source;

    bool same_data(const AlgebraProfile& o) const;
};

AlgebraProfile profile_of(const ExhaustionDescriptor& d, const Rational& precision);

/// Validates all AlgebraProfile invariants and returns the profile.
/// The only route by which strongly non-symmetric data enters the system.
AlgebraProfile certify(const AlgebraProfile& p);

/// Recompute delta at a finer precision when the profile is
/// descriptor-backed; otherwise returns the stored value.
IndexValue delta_at_precision(const AlgebraProfile& p, const Rational& precision);

}  // namespace dla
