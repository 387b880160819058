#include "dla/classify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dla {

std::string to_string(Answer a) {
    switch (a) {
        case Answer::Yes: return "YES";
        case Answer::No: return "NO";
        case Answer::Unknown: return "UNKNOWN";
    }
    return "?";
}

std::string to_string(CondStatus s) {
    switch (s) {
        case CondStatus::Pass: return "PASS";
        case CondStatus::Fail: return "FAIL";
        case CondStatus::Vacuous: return "VACUOUS";
        case CondStatus::Unknown: return "UNKNOWN";
    }
    return "?";
}

std::string Verdict::to_report() const {
    std::ostringstream os;
    os << "RESULT: " << to_string(answer) << "\n";
    for (const auto& t : trace)
        os << "COND " << t.id << " " << to_string(t.status)
           << (t.detail.empty() ? "" : " " + t.detail) << "\n";
    return os.str();
}

Rational default_precision() { return Rational(1, BigInt(1) << 40); }

namespace {

enum class Cmp { Lt, Eq, Gt, Undecided };

Cmp cmp_intervals(const Rational& alo, const Rational& ahi, const Rational& blo,
                  const Rational& bhi) {
    if (alo == ahi && blo == bhi) return alo < blo ? Cmp::Lt : (alo > blo ? Cmp::Gt : Cmp::Eq);
    if (ahi < blo) return Cmp::Lt;
    if (alo > bhi) return Cmp::Gt;
    return Cmp::Undecided;
}

// Interval state for one profile's delta, refinable when descriptor-backed.
struct DeltaState {
    const AlgebraProfile* p;
    Rational precision;
    IndexValue value;

    explicit DeltaState(const AlgebraProfile& prof, const Rational& prec)
        : p(&prof), precision(prec), value(prof.delta) {}

    bool refinable() const { return !is_exact(value) && p->source.has_value(); }
    void refine() {
        precision /= 2;
        value = delta_at_precision(*p, precision);
    }
};

// Compare a * delta2 vs b * delta1 (the cross-multiplied form of
// a/delta1 <= b/delta2), refining intervals up to the round cap.
Cmp cmp_scaled_deltas(const BigInt& a, DeltaState& d2, const BigInt& b, DeltaState& d1,
                      Rational& precision_used) {
    for (int round = 0; round <= kRefinementRounds; ++round) {
        Rational alo = Rational(a) * lower_bound(d2.value);
        Rational ahi = Rational(a) * upper_bound(d2.value);
        Rational blo = Rational(b) * lower_bound(d1.value);
        Rational bhi = Rational(b) * upper_bound(d1.value);
        Cmp c = cmp_intervals(alo, ahi, blo, bhi);
        precision_used = std::min(precision_used, std::min(d1.precision, d2.precision));
        if (c != Cmp::Undecided) return c;
        if (!d1.refinable() && !d2.refinable()) return Cmp::Undecided;
        if (d1.refinable()) d1.refine();
        if (d2.refinable()) d2.refine();
    }
    return Cmp::Undecided;
}

// Same comparison for sigma values (never refinable: sigma is exact for
// all generated tails and fixed for certified profiles).
Cmp cmp_scaled_sigmas(const BigInt& a, const IndexValue& s1, const BigInt& b,
                      const IndexValue& s2) {
    return cmp_intervals(Rational(a) * lower_bound(s1), Rational(a) * upper_bound(s1),
                         Rational(b) * lower_bound(s2), Rational(b) * upper_bound(s2));
}

bool has_infinite_prime(const SteinitzNumber& s) {
    if (s.default_exponent().is_inf()) return true;
    for (const auto& [p, e] : s.exceptions())
        if (e.is_inf()) return true;
    return false;
}

// Primes carrying an infinite exponent (exceptions only; callers handle
// the default-INF case separately).
std::set<std::uint64_t> infinite_primes(const SteinitzNumber& s) {
    std::set<std::uint64_t> out;
    for (const auto& [p, e] : s.exceptions())
        if (e.is_inf()) out.insert(p);
    return out;
}

struct TraceBuilder {
    std::vector<TraceLine> lines;
    bool any_fail = false;
    bool any_unknown = false;

    void add(std::string id, CondStatus st, std::string detail = "") {
        if (st == CondStatus::Fail) any_fail = true;
        if (st == CondStatus::Unknown) any_unknown = true;
        lines.push_back({std::move(id), st, std::move(detail)});
    }
    Verdict finish(const Rational& precision) const {
        Verdict v;
        v.trace = lines;
        v.precision_used = precision;
        v.answer = any_fail ? Answer::No : (any_unknown ? Answer::Unknown : Answer::Yes);
        return v;
    }
};

std::string pair_detail(const AlgebraProfile& p1, const AlgebraProfile& p2) {
    return to_string(p1.type) + "(" + to_string(p1.density) + "," + to_string(p1.symmetry) +
           ") vs " + to_string(p2.type) + "(" + to_string(p2.density) + "," +
           to_string(p2.symmetry) + ")";
}

// Effective C of a profile: one-sided type A algebras have C = S under the
// normalization c_i = s_i.
std::optional<SteinitzNumber> effective_C(const AlgebraProfile& p) {
    if (p.type != AlgType::A) return std::nullopt;
    if (p.C) return p.C;
    if (p.symmetry == SymmetryClass::OneSided) return p.S;
    return std::nullopt;
}

bool two_sided_non_symmetric(const AlgebraProfile& p) {
    return p.symmetry == SymmetryClass::WeaklyNonSymmetric ||
           p.symmetry == SymmetryClass::StronglyNonSymmetric;
}

// Decides whether some alpha in S1/S2 satisfies alpha * rho in C1/C2.
// Free integer exponents are available exactly at primes where S1 carries
// an infinite power (then so does S2); at every other prime the valuation
// of alpha is pinned by the finite S-exponent differences.
bool exists_alpha(const SteinitzNumber& S1, const SteinitzNumber& S2, const Rational& rho,
                  const SteinitzNumber& C1, const SteinitzNumber& C2) {
    Rational q0;
    if (!q_equivalent(S1, S2, &q0)) return false;
    if (!q_equivalent(C1, C2)) return false;

    bool s_default_inf = S1.default_exponent().is_inf();
    auto s_inf = infinite_primes(S1);
    bool c_default_inf = C1.default_exponent().is_inf() && C2.default_exponent().is_inf();

    Rational fixed = q0 * rho;
    std::set<std::uint64_t> support;
    for (const auto& [p, e] : factorize(numerator(fixed))) support.insert(p);
    for (const auto& [p, e] : factorize(denominator(fixed))) support.insert(p);
    for (const auto& [p, e] : C1.exceptions()) support.insert(p);
    for (const auto& [p, e] : C2.exceptions()) support.insert(p);
    for (const auto& [p, e] : S1.exceptions()) support.insert(p);

    auto vp = [](const BigInt& n, std::uint64_t p) {
        long long v = 0;
        BigInt m = n;
        while (m % p == 0) {
            m /= p;
            ++v;
        }
        return v;
    };

    for (std::uint64_t p : support) {
        if (s_default_inf && !S1.exceptions().count(p)) continue;  // alpha free at p
        if (s_inf.count(p)) continue;                              // alpha free at p
        Exponent e1 = C1.exponent_of(p), e2 = C2.exponent_of(p);
        if (e1.is_inf() && e2.is_inf()) continue;  // slack in the C-ratio
        if (e1.is_inf() != e2.is_inf()) return false;
        long long need = static_cast<long long>(e1.finite_value()) -
                         static_cast<long long>(e2.finite_value());
        long long have = vp(numerator(fixed), p) - vp(denominator(fixed), p);
        if (need != have) return false;
    }
    (void)c_default_inf;
    return true;
}

}  // namespace

EmbedContext make_embed_context(const AlgebraProfile& p1, const AlgebraProfile& p2) {
    EmbedContext ctx;
    ctx.S1 = p1.S;
    ctx.S2 = p2.S;
    ctx.S = stz_gcd(p1.S, p2.S);
    ctx.R1 = quotst(p1.S, ctx.S);
    ctx.R2 = quotst(p2.S, ctx.S);
    ctx.C1 = effective_C(p1);
    ctx.C2 = effective_C(p2);
    if (ctx.C1 && ctx.C2) {
        ctx.C = stz_gcd(*ctx.C1, *ctx.C2);
        ctx.B1 = quotst(*ctx.C1, *ctx.C);
        ctx.B2 = quotst(*ctx.C2, *ctx.C);
    }
    ctx.delta1 = p1.delta;
    ctx.delta2 = p2.delta;
    ctx.sigma1 = p1.sigma;
    ctx.sigma2 = p2.sigma;
    return ctx;
}

namespace {

// Conditions A1-A3 shared by the same-type and cross-type isomorphism
// theorems; appended to an existing trace.
void iso_A_conditions(TraceBuilder& tb, const AlgebraProfile& p1, const AlgebraProfile& p2,
                      Rational& precision_used, const Rational& precision) {
    if (p1.density == p2.density)
        tb.add("A1", CondStatus::Pass, "density types " + to_string(p1.density));
    else
        tb.add("A1", CondStatus::Fail,
               to_string(p1.density) + " vs " + to_string(p2.density));

    Rational q0;
    bool a2 = q_equivalent(p1.S, p2.S, &q0);
    if (a2)
        tb.add("A2", CondStatus::Pass, "Stz(S) ~Q Stz(S'), witness q = " + to_string(q0));
    else
        tb.add("A2", CondStatus::Fail, "S = " + p1.S.to_string() + " vs " + p2.S.to_string());

    if (p1.density == DensityClass::Sparse && p2.density == DensityClass::Sparse) {
        tb.add("A3", CondStatus::Vacuous, "sparse sequences");
        return;
    }
    if (tb.any_fail) {
        tb.add("A3", CondStatus::Vacuous, "earlier condition failed");
        return;
    }
    if (!is_exact(p1.delta) || !is_exact(p2.delta)) {
        // A dense limit has no closed form here; only structural identity
        // could have settled it, and that was checked upstream.
        tb.add("A3", CondStatus::Unknown, "delta known only as an interval");
        return;
    }
    Rational ratio = lower_bound(p1.delta) / lower_bound(p2.delta);
    bool ok = ratio_contains(ratio, p1.S, p2.S);
    (void)precision;
    (void)precision_used;
    tb.add("A3", ok ? CondStatus::Pass : CondStatus::Fail,
           "delta/delta' = " + to_string(ratio) + (ok ? " lies in" : " not in") + " S/S'");
}

}  // namespace

Verdict isomorphic(const AlgebraProfile& p1, const AlgebraProfile& p2,
                   const Rational& precision) {
    certify(p1);
    certify(p2);
    TraceBuilder tb;
    Rational precision_used = precision;

    if (p1.same_data(p2)) {
        tb.add("IDENT", CondStatus::Pass, "structurally identical inputs");
        return tb.finish(precision_used);
    }

    const bool same_type = p1.type == p2.type;
    if (same_type) {
        iso_A_conditions(tb, p1, p2, precision_used, precision);

        if (p1.symmetry == p2.symmetry)
            tb.add("B1", CondStatus::Pass, "symmetry types " + to_string(p1.symmetry));
        else
            tb.add("B1", CondStatus::Fail,
                   to_string(p1.symmetry) + " vs " + to_string(p2.symmetry));

        if (p1.type == AlgType::A && p1.symmetry == p2.symmetry &&
            two_sided_non_symmetric(p1)) {
            auto c1 = effective_C(p1), c2 = effective_C(p2);
            bool b2 = c1 && c2 && q_equivalent(*c1, *c2);
            tb.add("B2", b2 ? CondStatus::Pass : CondStatus::Fail, "Stz(C) ~Q Stz(C')");

            if (p1.symmetry == SymmetryClass::StronglyNonSymmetric) {
                if (!b2) {
                    tb.add("B3", CondStatus::Vacuous, "B2 failed");
                } else if (!is_exact(p1.sigma) || !is_exact(p2.sigma)) {
                    tb.add("B3", CondStatus::Unknown, "sigma known only as an interval");
                } else if (p1.density != DensityClass::Sparse) {
                    // alpha is forced to delta/delta' for dense and pure.
                    if (!is_exact(p1.delta) || !is_exact(p2.delta)) {
                        tb.add("B3", CondStatus::Unknown, "delta known only as an interval");
                    } else {
                        Rational alpha = lower_bound(p1.delta) / lower_bound(p2.delta);
                        Rational rho = lower_bound(p1.sigma) / lower_bound(p2.sigma);
                        bool ok = ratio_contains(alpha * rho, *c1, *c2);
                        tb.add("B3", ok ? CondStatus::Pass : CondStatus::Fail,
                               "alpha = delta/delta' = " + to_string(alpha));
                    }
                } else {
                    Rational rho = lower_bound(p1.sigma) / lower_bound(p2.sigma);
                    bool ok = exists_alpha(p1.S, p2.S, rho, *c1, *c2);
                    tb.add("B3", ok ? CondStatus::Pass : CondStatus::Fail,
                           ok ? "alpha found prime-wise" : "no alpha exists (prime-wise)");
                }
            } else {
                tb.add("B3", CondStatus::Vacuous, "not strongly non-symmetric");
            }
        } else {
            tb.add("B2", CondStatus::Vacuous, "not two-sided non-symmetric");
            tb.add("B3", CondStatus::Vacuous, "not strongly non-symmetric");
        }
        return tb.finish(precision_used);
    }

    // Cross-type cases.
    const SteinitzNumber two_inf = SteinitzNumber::from_factors({{2, Exponent::inf()}});
    const bool a_involved = p1.type == AlgType::A || p2.type == AlgType::A;
    if (a_involved) {
        const AlgebraProfile& a_side = (p1.type == AlgType::A) ? p1 : p2;
        const AlgebraProfile& other = (p1.type == AlgType::A) ? p2 : p1;
        if (a_side.symmetry == SymmetryClass::TwoSidedSymmetric)
            tb.add("T24-SYM", CondStatus::Pass, "type A side is two-sided symmetric");
        else
            tb.add("T24-SYM", CondStatus::Fail,
                   "type A side is " + to_string(a_side.symmetry));
        bool div = divides(two_inf, other.S);
        tb.add("T24-2INF", div ? CondStatus::Pass : CondStatus::Fail,
               std::string("2^inf ") + (div ? "divides" : "does not divide") + " Stz(S) of the " +
                   to_string(other.type) + " side");
    } else {
        bool d1 = divides(two_inf, p1.S);
        bool d2 = divides(two_inf, p2.S);
        tb.add("T24-2INF-1", d1 ? CondStatus::Pass : CondStatus::Fail,
               "2^inf | S of the first algebra");
        tb.add("T24-2INF-2", d2 ? CondStatus::Pass : CondStatus::Fail,
               "2^inf | S of the second algebra");
    }
    iso_A_conditions(tb, p1, p2, precision_used, precision);
    return tb.finish(precision_used);
}

namespace {

struct EpsilonChoice {
    // 1, 2, or -1 when undecided (an interval sigma comparison).
    int eps = 2;
    std::string branch = "default";
    std::string note;
};

EpsilonChoice epsilon_for(const AlgebraProfile& p1, const AlgebraProfile& p2,
                          const EmbedContext& ctx) {
    EpsilonChoice out;
    const AlgType x1 = p1.type, x2 = p2.type;
    auto is_one_sided = [](const AlgebraProfile& p) {
        return p.symmetry == SymmetryClass::OneSided;
    };

    // 3.1
    if ((x1 == AlgType::C && x2 == AlgType::C) || (x1 == AlgType::O && x2 == AlgType::O) ||
        (x1 == AlgType::C && x2 == AlgType::A) || (x1 == AlgType::O && x2 == AlgType::A) ||
        (x1 == AlgType::A && x2 == AlgType::A && is_one_sided(p1) && is_one_sided(p2))) {
        out.eps = 1;
        out.branch = "3.1";
        return out;
    }
    if (x1 != AlgType::A || x2 != AlgType::A) return out;  // cross-type pairs not above: eps = 2

    const bool b1_finite = ctx.B1 && is_finite(*ctx.B1);
    const bool b2_finite = ctx.B2 && is_finite(*ctx.B2);

    // 3.2
    if (b1_finite && ((is_one_sided(p1) && two_sided_non_symmetric(p2)) ||
                      (p2.symmetry == SymmetryClass::WeaklyNonSymmetric &&
                       two_sided_non_symmetric(p1)))) {
        out.eps = 1;
        out.branch = "3.2";
        return out;
    }

    const bool both_strong = p1.symmetry == SymmetryClass::StronglyNonSymmetric &&
                             p2.symmetry == SymmetryClass::StronglyNonSymmetric;
    if (both_strong && ctx.B1 && ctx.B2 && ctx.C) {
        // 3.3 -- the theorem text says "any prime" where the constructive
        // lemma says "some prime"; "some prime" is implemented.
        if (b1_finite && (!b2_finite || has_infinite_prime(*ctx.C))) {
            out.eps = 1;
            out.branch = "3.3";
            out.note = "reading 'divisible by an infinite power of some prime'";
            return out;
        }
        // 3.4
        if (b1_finite && b2_finite && !has_infinite_prime(*ctx.C)) {
            BigInt r1 = to_integer(ctx.R1) * to_integer(*ctx.B2);
            BigInt r2 = to_integer(ctx.R2) * to_integer(*ctx.B1);
            Cmp c = cmp_scaled_sigmas(r1, ctx.sigma1, r2, ctx.sigma2);
            if (c == Cmp::Gt || c == Cmp::Eq) {
                out.eps = 1;
                out.branch = "3.4";
                return out;
            }
            if (c == Cmp::Undecided) {
                out.eps = -1;
                out.branch = "3.4";
                out.note = "sigma comparison undecided";
                return out;
            }
        }
    }
    return out;
}

// Condition 3's inequality for one epsilon; Pass/Fail/Unknown.
CondStatus condition3_inequality(int eps, const AlgebraProfile& p1, const AlgebraProfile& p2,
                                 const EmbedContext& ctx, const Rational& precision,
                                 Rational& precision_used, std::string& detail) {
    const bool strict =
        p1.density == DensityClass::Pure && p2.density == DensityClass::Dense;
    BigInt a = BigInt(eps) * to_integer(ctx.R1);
    BigInt b = to_integer(ctx.R2);
    DeltaState d1(p1, precision), d2(p2, precision);
    Cmp c = cmp_scaled_deltas(a, d2, b, d1, precision_used);
    std::ostringstream os;
    os << "eps = " << eps << ", " << eps << "*R1/delta1 " << (strict ? "<" : "<=")
       << " R2/delta2 with R1 = " << to_integer(ctx.R1) << ", R2 = " << b;
    detail = os.str();
    switch (c) {
        case Cmp::Lt: return CondStatus::Pass;
        case Cmp::Eq: return strict ? CondStatus::Fail : CondStatus::Pass;
        case Cmp::Gt: return CondStatus::Fail;
        case Cmp::Undecided: return CondStatus::Unknown;
    }
    return CondStatus::Unknown;
}

}  // namespace

Verdict embeds(const AlgebraProfile& p1, const AlgebraProfile& p2, const Rational& precision) {
    certify(p1);
    certify(p2);
    TraceBuilder tb;
    Rational precision_used = precision;

    if (p1.same_data(p2)) {
        tb.add("IDENT", CondStatus::Pass, "structurally identical inputs");
        return tb.finish(precision_used);
    }
    if (p1.finitary) {
        tb.add("a", CondStatus::Pass,
               "finitary algebras embed into any infinite-dimensional diagonal algebra");
        return tb.finish(precision_used);
    }
    if (p2.finitary) {
        tb.add("a", CondStatus::Fail,
               "a non-finitary algebra admits no injective homomorphism into a finitary one");
        return tb.finish(precision_used);
    }
    tb.add("a", CondStatus::Vacuous, "neither algebra finitary");

    EmbedContext ctx = make_embed_context(p1, p2);
    bool r1_fin = is_finite(ctx.R1);
    tb.add("1", r1_fin ? CondStatus::Pass : CondStatus::Fail,
           "R1 = " + ctx.R1.to_string() + (r1_fin ? " is finite" : " is infinite"));

    if (p1.density == DensityClass::Sparse && p2.density != DensityClass::Sparse)
        tb.add("2", CondStatus::Fail, "sparse source, " + to_string(p2.density) + " target");
    else if (p1.density == DensityClass::Sparse)
        tb.add("2", CondStatus::Pass, "sparse source, sparse target");
    else
        tb.add("2", CondStatus::Vacuous, "source not sparse");

    const bool guard = p1.density != DensityClass::Sparse &&
                       p2.density != DensityClass::Sparse && r1_fin && is_finite(ctx.R2) &&
                       !has_infinite_prime(ctx.S);
    if (!guard) {
        tb.add("3", CondStatus::Vacuous,
               "needs both non-sparse, R1 and R2 finite, S free of infinite prime powers");
        return tb.finish(precision_used);
    }

    EpsilonChoice ec = epsilon_for(p1, p2, ctx);
    if (ec.eps > 0) {
        std::string detail;
        CondStatus st =
            condition3_inequality(ec.eps, p1, p2, ctx, precision, precision_used, detail);
        tb.add("3", st,
               "[case " + ec.branch + (ec.note.empty() ? "" : ", " + ec.note) + "] " + detail +
                   "; " + pair_detail(p1, p2));
    } else {
        // Epsilon itself is undecided; decisive only if both choices agree.
        std::string d1, d2;
        CondStatus s1 =
            condition3_inequality(1, p1, p2, ctx, precision, precision_used, d1);
        CondStatus s2 =
            condition3_inequality(2, p1, p2, ctx, precision, precision_used, d2);
        CondStatus st = (s1 == s2) ? s1 : CondStatus::Unknown;
        tb.add("3", st, "[case " + ec.branch + " undecided: " + ec.note + "] " + d2);
    }
    return tb.finish(precision_used);
}

Verdict equivalent(const AlgebraProfile& p1, const AlgebraProfile& p2,
                   const Rational& precision) {
    certify(p1);
    certify(p2);
    TraceBuilder tb;
    Rational precision_used = precision;

    if (p1.same_data(p2)) {
        tb.add("IDENT", CondStatus::Pass, "structurally identical inputs");
        return tb.finish(precision_used);
    }
    if (p1.finitary || p2.finitary) {
        if (p1.finitary && p2.finitary)
            tb.add("a", CondStatus::Pass, "the finitary algebras are pairwise equivalent");
        else
            tb.add("a", CondStatus::Fail,
                   "a finitary algebra is never equivalent to a non-finitary one");
        return tb.finish(precision_used);
    }
    tb.add("a", CondStatus::Vacuous, "neither algebra finitary");

    EmbedContext ctx = make_embed_context(p1, p2);
    Rational q0;
    bool c1 = q_equivalent(p1.S, p2.S, &q0);
    tb.add("1", c1 ? CondStatus::Pass : CondStatus::Fail,
           c1 ? "S1 ~Q S2, witness q = " + to_string(q0) : "S1 !~Q S2");

    bool sp1 = p1.density == DensityClass::Sparse, sp2 = p2.density == DensityClass::Sparse;
    tb.add("2", sp1 == sp2 ? CondStatus::Pass : CondStatus::Fail,
           sp1 == sp2 ? "both " + std::string(sp1 ? "sparse" : "non-sparse")
                      : "sparse on one side only");

    // Condition 1 passing makes both R's finite; without it the answer is
    // already No and the remaining conditions are moot.
    const bool guard = c1 && !sp1 && !sp2 && !has_infinite_prime(ctx.S);
    if (!guard) {
        for (const char* id : {"3.1", "3.2", "3.3", "3.4", "3.5", "3.6"})
            tb.add(id, CondStatus::Vacuous,
                   !c1 ? "condition 1 failed"
                       : "needs both non-sparse and S free of infinite prime powers");
        return tb.finish(precision_used);
    }

    // 3.1: R1/delta1 = R2/delta2.
    {
        BigInt a = to_integer(ctx.R1), b = to_integer(ctx.R2);
        DeltaState d1(p1, precision), d2(p2, precision);
        Cmp c = cmp_scaled_deltas(a, d2, b, d1, precision_used);
        CondStatus st = (c == Cmp::Eq)
                            ? CondStatus::Pass
                            : (c == Cmp::Undecided ? CondStatus::Unknown : CondStatus::Fail);
        tb.add("3.1", st, "R1/delta1 = R2/delta2 with R1 = " + a.str() + ", R2 = " + b.str());
    }
    tb.add("3.2", p1.density == p2.density ? CondStatus::Pass : CondStatus::Fail,
           to_string(p1.density) + " vs " + to_string(p2.density));
    tb.add("3.3", p1.type == p2.type ? CondStatus::Pass : CondStatus::Fail,
           to_string(p1.type) + " vs " + to_string(p2.type));
    tb.add("3.4", p1.symmetry == p2.symmetry ? CondStatus::Pass : CondStatus::Fail,
           to_string(p1.symmetry) + " vs " + to_string(p2.symmetry));

    if (p1.symmetry == p2.symmetry && two_sided_non_symmetric(p1)) {
        auto c1p = effective_C(p1), c2p = effective_C(p2);
        bool b35 = c1p && c2p && q_equivalent(*c1p, *c2p);
        tb.add("3.5", b35 ? CondStatus::Pass : CondStatus::Fail, "C1 ~Q C2");
    } else {
        tb.add("3.5", CondStatus::Vacuous, "not two-sided non-symmetric");
    }

    if (p1.symmetry == SymmetryClass::StronglyNonSymmetric &&
        p2.symmetry == SymmetryClass::StronglyNonSymmetric && ctx.C &&
        !has_infinite_prime(*ctx.C)) {
        if (!ctx.B1 || !ctx.B2 || !is_finite(*ctx.B1) || !is_finite(*ctx.B2)) {
            tb.add("3.6", CondStatus::Fail, "B1 or B2 infinite");
        } else {
            BigInt a = to_integer(ctx.R1) * to_integer(*ctx.B2);
            BigInt b = to_integer(ctx.R2) * to_integer(*ctx.B1);
            Cmp c = cmp_scaled_sigmas(a, ctx.sigma1, b, ctx.sigma2);
            CondStatus st = (c == Cmp::Eq)
                                ? CondStatus::Pass
                                : (c == Cmp::Undecided ? CondStatus::Unknown : CondStatus::Fail);
            tb.add("3.6", st, "R1*sigma1/B1 = R2*sigma2/B2");
        }
    } else {
        tb.add("3.6", CondStatus::Vacuous,
               "needs both strongly non-symmetric and C free of infinite prime powers");
    }
    return tb.finish(precision_used);
}

bool is_universal(const AlgebraProfile& p) {
    certify(p);
    if (p.density != DensityClass::Sparse) return false;
    if (!p.S.default_exponent().is_inf()) return false;
    for (const auto& [prime, e] : p.S.exceptions())
        if (!e.is_inf()) return false;
    // Canonical form stores no exceptions when all agree with the default;
    // any remaining exception would be finite and was rejected above.
    return p.S.exceptions().empty();
}

}  // namespace dla
