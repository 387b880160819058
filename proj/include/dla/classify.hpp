#pragma once

#include "dla/exhaustions.hpp"
#include "dla/numeric.hpp"
#include "dla/steinitz.hpp"

#include <string>
#include <vector>

namespace dla {

enum class Answer { Yes, No, Unknown };
enum class CondStatus { Pass, Fail, Vacuous, Unknown };

std::string to_string(Answer a);
std::string to_string(CondStatus s);

struct TraceLine {
    std::string id;
    CondStatus status = CondStatus::Vacuous;
    std::string detail;
};

/// Decision outcome with a machine-readable trace.  Unknown arises only
/// from interval comparisons that hit the refinement cap; the trace names
/// the blocking condition.
struct Verdict {
    Answer answer = Answer::Unknown;
    std::vector<TraceLine> trace;
    Rational precision_used = 0;

    bool yes() const { return answer == Answer::Yes; }
    bool no() const { return answer == Answer::No; }
    /// Serialization: "RESULT: ..." then one "COND id STATUS detail" line
    /// per condition.
    std::string to_report() const;
};

/// Shared Steinitz data of an ordered pair of algebras.
struct EmbedContext {
    SteinitzNumber S1, S2, S;    // S = GCD(S1, S2)
    SteinitzNumber R1, R2;       // R_i = quotst(S_i, S)
    std::optional<SteinitzNumber> C1, C2, C, B1, B2;
    IndexValue delta1, delta2;
    IndexValue sigma1, sigma2;
    int epsilon = 2;             // filled by the embeds case table
};

EmbedContext make_embed_context(const AlgebraProfile& p1, const AlgebraProfile& p2);

/// Isomorphism per the classification theorems: same-type conditions
/// A1-A3 and B1-B3, cross-type conditions for A vs O/C and O vs C.
Verdict isomorphic(const AlgebraProfile& p1, const AlgebraProfile& p2, const Rational& precision);

/// Existence of an injective homomorphism of p1 into p2: the finitary
/// shortcuts, then conditions 1 (R1 finite), 2 (sparse implies sparse) and
/// 3 (the epsilon-weighted density inequality with the 3.1-3.4 case table).
Verdict embeds(const AlgebraProfile& p1, const AlgebraProfile& p2, const Rational& precision);

/// Mutual embeddability, decided directly by the equivalence-class
/// corollary (conditions 1, 2, 3.1-3.6).
Verdict equivalent(const AlgebraProfile& p1, const AlgebraProfile& p2, const Rational& precision);

/// Greatest element: sparse with S = product of every prime to the
/// infinite power.
bool is_universal(const AlgebraProfile& p);

constexpr int kRefinementRounds = 64;

Rational default_precision();  // 2^-40

}  // namespace dla
