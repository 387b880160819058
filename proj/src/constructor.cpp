#include "dla/constructor.hpp"

#include "dla/io.hpp"
#include "dla/primes.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dla {

namespace {

constexpr std::size_t kSearchCap = 200000;

BigInt rational_ceil(const Rational& x) {
    BigInt num = numerator(x), den = denominator(x);
    BigInt q = num / den;
    if (q * den < num) ++q;
    return q;
}

// Deterministic enumeration of factors of an infinite Steinitz number:
// round r emits, in increasing order, every one of the first r primes
// that still has a positive remaining exponent.
class SteinitzFactorStream {
public:
    explicit SteinitzFactorStream(const SteinitzNumber& s) : s_(s) {}

    BigInt next() {
        while (queue_.empty()) {
            ++round_;
            if (round_ > 100000) throw TargetTooSmall("factor stream exhausted");
            for (std::size_t idx = 1; idx <= round_; ++idx) {
                std::uint64_t p = sieve().nth(idx);
                Exponent e = s_.exponent_of(p);
                if (e.is_inf()) {
                    queue_.push_back(p);
                    continue;
                }
                std::uint64_t used = consumed_[p];
                if (used < e.finite_value()) {
                    queue_.push_back(p);
                    consumed_[p] = used + 1;
                }
            }
        }
        BigInt out(queue_.front());
        queue_.erase(queue_.begin());
        return out;
    }

private:
    SteinitzNumber s_;
    std::map<std::uint64_t, std::uint64_t> consumed_;
    std::vector<std::uint64_t> queue_;
    std::size_t round_ = 0;
};

class DescriptorFactorStream {
public:
    explicit DescriptorFactorStream(const ExhaustionDescriptor& d) : walker_(d), n0_(d.n0) {}

    BigInt next() {
        if (!emitted_n0_) {
            emitted_n0_ = true;
            return n0_;
        }
        BigInt s = walker_.current().sig.s();
        walker_.advance();
        return s;
    }

private:
    LevelWalker walker_;
    BigInt n0_;
    bool emitted_n0_ = false;
};

bool has_infinite_prime(const SteinitzNumber& s) {
    if (s.default_exponent().is_inf()) return true;
    for (const auto& [p, e] : s.exceptions())
        if (e.is_inf()) return true;
    return false;
}

// Smallest prime whose exponent in s is infinite, if any.
std::optional<std::uint64_t> smallest_infinite_prime(const SteinitzNumber& s) {
    std::optional<std::uint64_t> best;
    for (const auto& [p, e] : s.exceptions())
        if (e.is_inf() && (!best || p < *best)) best = p;
    if (s.default_exponent().is_inf()) {
        for (std::size_t i = 1;; ++i) {
            std::uint64_t p = sieve().nth(i);
            if (best && *best < p) break;
            if (!s.exceptions().count(p)) return p;
        }
    }
    return best;
}

// A finite divisor of `pool` exceeding `bound`, built from an infinite
// prime power when available, otherwise from distinct default-exponent
// primes.  Used as the paper's R'2.
BigInt finite_divisor_above(const SteinitzNumber& pool, const Rational& bound) {
    if (auto p = smallest_infinite_prime(pool)) {
        BigInt r = 1;
        while (Rational(r) <= bound) r *= *p;
        return r;
    }
    if (!pool.default_exponent().is_inf() && pool.default_exponent().finite_value() >= 1) {
        BigInt r = 1;
        for (std::size_t i = 1; Rational(r) <= bound; ++i) {
            std::uint64_t p = sieve().nth(i);
            Exponent e = pool.exponent_of(p);
            if (!e.is_inf() && e.finite_value() == 0) continue;
            r *= p;
            if (i > 100000) throw std::logic_error("finite_divisor_above: no divisor found");
        }
        return r;
    }
    throw std::logic_error("finite_divisor_above: pool has no infinite part");
}

enum class Recipe { OneSided, Symmetric, Doubled };

struct BuildPlan {
    Recipe recipe = Recipe::Symmetric;
    BigInt r_divisor = 1;  // the R in q_i = m0 s'_0...s'_{k-1} / (R p_i)
    int cond6_factor = 2;  // x + y = factor * q
    std::string branch;
};

std::pair<BigInt, BigInt> xy_of(const BuildPlan& plan, const BigInt& q) {
    switch (plan.recipe) {
        case Recipe::OneSided: return {q, 0};
        case Recipe::Symmetric: return {q, q};
        case Recipe::Doubled: return {2 * q, 0};
    }
    return {q, q};
}

BuildPlan select_plan(const AlgebraProfile& p1, const AlgebraProfile& p2,
                      const EmbedContext& ctx) {
    BuildPlan plan;
    const bool src_a = p1.type == AlgType::A;
    const bool tgt_one_sided = p2.symmetry == SymmetryClass::OneSided;
    auto non_a_recipe = [&]() { return tgt_one_sided ? Recipe::Doubled : Recipe::Symmetric; };

    if (p2.density == DensityClass::Sparse) {
        plan.branch = "sparse-target";
        plan.r_divisor = 1;
        plan.recipe = src_a ? Recipe::Symmetric : non_a_recipe();
        plan.cond6_factor = 2;
        return plan;
    }
    if (p1.finitary)
        throw UnsupportedConstruction(
            "finitary source into a non-sparse target: witnessed by the exterior-power "
            "triangle, not a signature ladder");
    if (!is_finite(ctx.R2) || has_infinite_prime(ctx.S)) {
        plan.branch = "infinite-headroom";
        Rational bound = Rational(2 * to_integer(ctx.R1)) / lower_bound(p1.delta);
        plan.r_divisor = has_infinite_prime(ctx.S) ? finite_divisor_above(ctx.S, bound)
                                                   : finite_divisor_above(ctx.R2, bound);
        plan.recipe = src_a ? Recipe::Symmetric : non_a_recipe();
        plan.cond6_factor = 2;
        return plan;
    }

    // Numeric branches: R1, R2 finite and S free of infinite prime powers,
    // so both profiles are pure and the margins are exact rationals.
    BigInt r1 = to_integer(ctx.R1), r2 = to_integer(ctx.R2);
    Rational d1 = lower_bound(p1.delta), d2 = lower_bound(p2.delta);
    const bool margin1 = Rational(r1) * d2 <= Rational(r2) * d1;
    const bool margin2 = Rational(2 * r1) * d2 <= Rational(r2) * d1;

    const bool plain_one_sided_pair =
        p1.symmetry == SymmetryClass::OneSided && tgt_one_sided &&
        !(p1.type == AlgType::A && p2.type != AlgType::A) &&  // (A,C)/(A,O) need x = y
        !(p1.type != AlgType::A && p2.type != AlgType::A &&
          p1.type != p2.type);  // (O,C)/(C,O) need x even

    if (plain_one_sided_pair && margin1) {
        plan.branch = "one-sided";
        plan.r_divisor = r2;
        plan.recipe = Recipe::OneSided;
        plan.cond6_factor = 1;
        return plan;
    }
    if (margin2) {
        plan.branch = "doubled-margin";
        plan.r_divisor = r2;
        plan.recipe = src_a ? Recipe::Symmetric : non_a_recipe();
        plan.cond6_factor = 2;
        return plan;
    }
    throw UnsupportedConstruction(
        "embedding exists only through re-signatured exhaustions (two-sided margin-1 case); "
        "no witness is built for it");
}

}  // namespace

EmbeddingDiagram build_diagram(const ExhaustionDescriptor& d1, const ExhaustionDescriptor& d2,
                               std::size_t depth) {
    validate(d1);
    validate(d2);
    EmbeddingDiagram out;
    out.source = d1;
    out.target = d2;
    if (depth == 0) return out;

    if (d1 == d2) {
        LevelWalker w(d1);
        for (std::size_t i = 0; i < depth; ++i) {
            out.levels.push_back({i, i, 1, 0, 0});
            w.advance();
        }
        return out;
    }

    AlgebraProfile p1 = profile_of(d1, default_precision());
    AlgebraProfile p2 = profile_of(d2, default_precision());
    Verdict v = embeds(p1, p2, default_precision());
    if (!v.yes())
        throw NotEmbeddable("embeds() answered " + to_string(v.answer) + ", no witness exists");

    EmbedContext ctx = make_embed_context(p1, p2);
    BuildPlan plan = select_plan(p1, p2, ctx);
    const BigInt r1 = to_integer(ctx.R1);

    // First source level from which p_i = n0 s_0...s_{i-1} / R1 is integral.
    LevelWalker src(d1);
    BigInt src_partial = d1.n0;  // n0 * s_0...s_{i-1}
    std::size_t i0 = 0;
    while (src_partial % r1 != 0) {
        src_partial *= src.current().sig.s();
        src.advance();
        if (++i0 > kSearchCap) throw std::logic_error("build_diagram: R1 never divides");
    }

    LevelWalker tgt(d2);
    BigInt tgt_partial = d2.n0;  // m0 * s'_0...s'_{k-1}
    std::size_t k = 0;
    bool have_prev = false;
    std::size_t prev_k = 0;

    for (std::size_t lvl = 0; lvl < depth; ++lvl) {
        const std::size_t i = i0 + lvl;
        const BigInt p_i = src_partial / r1;
        const BigInt denom = plan.r_divisor * p_i;
        const BigInt n_i = src.current().n;

        std::size_t steps = 0;
        for (;;) {
            bool admissible = (!have_prev || k > prev_k) && tgt_partial % denom == 0;
            if (admissible) {
                BigInt q = tgt_partial / denom;
                if (q >= 1 && tgt.current().n >= plan.cond6_factor * q * n_i) break;
            }
            tgt_partial *= tgt.current().sig.s();
            tgt.advance();
            ++k;
            if (++steps > kSearchCap)
                throw std::logic_error("build_diagram: no admissible target level");
        }

        BigInt q = tgt_partial / denom;
        auto [x, y] = xy_of(plan, q);
        out.levels.push_back({i, k, x, y, tgt.current().n - (x + y) * n_i});
        have_prev = true;
        prev_k = k;

        src_partial *= src.current().sig.s();
        src.advance();
    }
    return out;
}

VerifyReport verify_diagram(const EmbeddingDiagram& diag) {
    VerifyReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };
    try {
        validate(diag.source);
        validate(diag.target);
    } catch (const std::exception& e) {
        fail(std::string("descriptor: ") + e.what());
        return rep;
    }

    const AlgType ts = diag.source.type, tt = diag.target.type;
    const bool parity_xy = ts == AlgType::A && tt != AlgType::A;   // A -> O/C
    const bool parity_even = ts != AlgType::A && tt != AlgType::A && ts != tt;  // O <-> C

    LevelWalker src(diag.source);
    LevelWalker tgt(diag.target);
    // Per-level source/target data, walked in step with the levels.
    std::optional<DiagramLevel> prev;
    BigInt prev_s, prev_c;
    BigInt s_span = 1, c_span = 1;  // target products over [k_prev, k_cur)

    for (std::size_t idx = 0; idx < diag.levels.size(); ++idx) {
        const DiagramLevel& L = diag.levels[idx];
        std::ostringstream at;
        at << "level " << L.source_level;

        if (L.x < 0 || L.y < 0) fail(at.str() + ": negative signature");
        if (L.x + L.y < 1) fail(at.str() + ": x + y must be at least 1");
        if (prev && L.target_level <= prev->target_level)
            fail(at.str() + ": target level not increasing");
        if (prev && L.source_level != prev->source_level + 1)
            fail(at.str() + ": source levels must be consecutive");

        while (src.index() < L.source_level) src.advance();
        if (prev) {
            s_span = 1;
            c_span = 1;
        }
        while (tgt.index() < L.target_level) {
            if (prev && tgt.index() >= prev->target_level) {
                s_span *= tgt.current().sig.s();
                c_span *= tgt.current().sig.c();
            }
            tgt.advance();
        }

        const BigInt n_i = src.current().n;
        const BigInt m_k = tgt.current().n;

        if (L.u != m_k - (L.x + L.y) * n_i)
            fail(at.str() + ": u != m_k - (x+y) n_i");
        if (m_k < (L.x + L.y) * n_i)
            fail(at.str() + ": dimension bound m_k >= (x+y) n_i violated");

        if (parity_xy && L.x != L.y) fail(at.str() + ": A -> O/C requires x = y");
        if (parity_even && L.x % 2 != 0) fail(at.str() + ": O <-> C requires even x");
        if (tt == AlgType::C && m_k % 2 != 0) fail(at.str() + ": type C target dimension odd");
        if (ts == AlgType::C && n_i % 2 != 0) fail(at.str() + ": type C source dimension odd");

        if (prev) {
            // Commutativity via index products.
            if (prev_s * (L.x + L.y) != (prev->x + prev->y) * s_span)
                fail(at.str() + ": index product mismatch (s-condition)");
            if (prev_c * (L.x - L.y) != (prev->x - prev->y) * c_span)
                fail(at.str() + ": c-index product mismatch (c-condition)");
        }

        prev = L;
        prev_s = src.current().sig.s();
        prev_c = src.current().sig.c();
    }
    return rep;
}

bool index_divisibility_check(const AlgebraProfile& p1, const AlgebraProfile& p2,
                              const EmbeddingDiagram& witness, std::size_t depth) {
    certify(p1);
    certify(p2);
    if (witness.levels.size() < 2 || depth < 2) return true;  // vacuous
    const std::size_t count = std::min(depth, witness.levels.size());

    const DiagramLevel& first = witness.levels.front();
    const BigInt M = first.x + first.y;

    LevelWalker src(witness.source);
    while (src.index() < first.source_level) src.advance();
    LevelWalker tgt(witness.target);
    while (tgt.index() < first.target_level) tgt.advance();

    BigInt src_prod = 1, tgt_prod = 1;
    for (std::size_t idx = 1; idx < count; ++idx) {
        const DiagramLevel& L = witness.levels[idx];
        while (src.index() < L.source_level) {
            src_prod *= src.current().sig.s();
            src.advance();
        }
        while (tgt.index() < L.target_level) {
            tgt_prod *= tgt.current().sig.s();
            tgt.advance();
        }
        if ((M * tgt_prod) % src_prod != 0) return false;
    }
    return true;
}

namespace {

// Shared row filler: given group sizes and b's, produce the triangle rows
// and check nonnegativity.
std::vector<std::vector<BigInt>> fill_rows(const std::vector<BigInt>& groups,
                                           const std::vector<Rational>& b) {
    const std::size_t K = groups.size();
    std::vector<std::vector<BigInt>> rows(K + 1);
    rows[0] = {1};
    BigInt N = 1;
    for (std::size_t k = 1; k <= K; ++k) {
        N *= groups[k - 1];
        Rational scaled = b[k - 1] * Rational(N);
        if (denominator(scaled) != 1)
            throw std::logic_error("triangle: b_k is not on the 1/(n_1...n_k) grid");
        BigInt a_top = numerator(scaled);  // a_{k-1}^k
        rows[k].assign(k + 1, 0);
        rows[k][k - 1] = a_top;
        rows[k][k] = groups[k - 1] * rows[k - 1][k - 1] - a_top;
        for (std::size_t i = k - 1; i-- > 0;)
            rows[k][i] = groups[k - 1] * rows[k - 1][i] - rows[k][i + 1];
        for (const BigInt& a : rows[k])
            if (a < 0) throw std::logic_error("triangle: negative entry");
    }
    return rows;
}

Triangle build_triangle_impl(const BigInt& q, const std::function<BigInt()>& next_factor,
                             const SteinitzNumber& S, std::size_t depth) {
    if (q < 2) throw std::invalid_argument("build_triangle: q must be at least 2");
    if (is_finite(S)) throw TargetTooSmall("build_triangle: target Steinitz number is finite");

    Triangle t;
    t.q = q;

    if (q < 4) {
        // Constant-n special case: valid exactly when the target is q^inf.
        SteinitzNumber q_inf = SteinitzNumber::from_factors(
            {{q.convert_to<std::uint64_t>(), Exponent::inf()}});
        if (S != q_inf)
            throw std::invalid_argument(
                "build_triangle: q < 4 requires the constant-n target q^inf");
        Rational pw = 1;
        for (std::size_t k = 1; k <= depth; ++k) {
            t.group_sizes.push_back(q);
            pw /= Rational(q);
            t.b.push_back(pw);  // b_k = q^-k
            t.eps.push_back(0);
        }
        t.rows = fill_rows(t.group_sizes, t.b);
        return t;
    }

    // General path: group the factor stream by the thresholds
    // n_1...n_k > (q-1) q^{k^2+1} / (q-2), then build b_k = f_k + eps_k
    // with exact rationals.
    BigInt product = 1;
    for (std::size_t k = 1; k <= depth; ++k) {
        BigInt threshold_rhs = (q - 1);  // (q-1) * q^{k^2+1}
        for (std::size_t e = 0; e < k * k + 1; ++e) threshold_rhs *= q;
        BigInt group = 1;
        std::size_t guard = 0;
        do {  // every group takes at least one factor (the l_k increase strictly)
            group *= next_factor();
            if (++guard > 1000000) throw TargetTooSmall("build_triangle: factors exhausted");
        } while (product * group * (q - 2) <= threshold_rhs);
        product *= group;
        t.group_sizes.push_back(group);
    }

    // q_i = q^-i as exact rationals, i = 1..depth.
    std::vector<Rational> qi(depth + 1);
    qi[0] = 1;
    for (std::size_t i = 1; i <= depth; ++i) qi[i] = qi[i - 1] / Rational(q);

    // c[j] holds c_{1j}..c_{jj} once eps_j is fixed.
    std::vector<std::vector<Rational>> c(depth + 1);
    BigInt N = 1;
    BigInt qk = 1;  // q^k
    for (std::size_t k = 1; k <= depth; ++k) {
        N *= t.group_sizes[k - 1];
        qk *= q;
        Rational f = Rational(1) / Rational(qk - 1);
        for (std::size_t j = 1; j < k; ++j)
            for (std::size_t i = 1; i <= j; ++i) {
                Rational qik = 1;  // q_i^k
                for (std::size_t e = 0; e < k; ++e) qik *= qi[i];
                f += c[j][i - 1] * qik;
            }
        Rational b = Rational(rational_ceil(f * Rational(N)), N);
        Rational eps = b - f;
        // cond3: 0 <= eps_k < (q-2) / ((q-1) q^{k^2+1})
        BigInt bound_den = (q - 1);
        for (std::size_t e = 0; e < k * k + 1; ++e) bound_den *= q;
        if (eps < 0 || eps * Rational(bound_den) >= Rational(q - 2))
            throw EpsilonBoundViolated("build_triangle: eps_k escaped its interval");
        t.b.push_back(b);
        t.eps.push_back(eps);

        // Fix c_{i,k} for this k from eps_k.
        c[k].resize(k);
        for (std::size_t i = 1; i <= k; ++i) {
            Rational denom = qi[i];
            for (std::size_t tt = 1; tt <= k; ++tt) {
                if (tt == i) continue;
                denom *= (qi[i] - qi[tt]);
            }
            c[k][i - 1] = eps / denom;
        }
    }
    t.rows = fill_rows(t.group_sizes, t.b);
    return t;
}

}  // namespace

Triangle build_triangle(const BigInt& q, const SteinitzNumber& target, std::size_t depth) {
    SteinitzFactorStream stream(target);
    return build_triangle_impl(q, [&stream]() { return stream.next(); }, target, depth);
}

Triangle build_triangle(const BigInt& q, const ExhaustionDescriptor& target,
                        std::size_t depth) {
    SteinitzNumber S = stz_S(target);
    DescriptorFactorStream stream(target);
    return build_triangle_impl(q, [&stream]() { return stream.next(); }, S, depth);
}

ExteriorLadder triangle_to_diagram(const Triangle& t) {
    VerifyReport rep = verify_triangle(t);
    if (!rep.ok)
        throw std::invalid_argument("triangle_to_diagram: invalid triangle: " +
                                    (rep.failures.empty() ? "" : rep.failures.front()));
    ExteriorLadder out;
    BigInt dim = 1;
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
        if (k > 0) dim *= t.group_sizes[k - 1];
        out.levels.push_back({k, dim, t.rows[k]});
    }
    return out;
}

VerifyReport verify_triangle(const Triangle& t) {
    VerifyReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };
    const std::size_t K = t.group_sizes.size();
    if (t.rows.size() != K + 1 || t.b.size() != K || t.eps.size() != K) {
        fail("shape: rows/b/eps sizes inconsistent");
        return rep;
    }
    if (t.rows[0] != std::vector<BigInt>{1}) fail("row 0 must be (1)");

    BigInt N = 1;
    Rational b_sum = 0;
    for (std::size_t k = 1; k <= K; ++k) {
        N *= t.group_sizes[k - 1];
        if (t.rows[k].size() != k + 1) {
            fail("row " + std::to_string(k) + " has wrong length");
            continue;
        }
        // cond1 recurrence and nonnegativity.
        for (std::size_t i = 0; i < k; ++i)
            if (t.rows[k][i] + t.rows[k][i + 1] != t.group_sizes[k - 1] * t.rows[k - 1][i])
                fail("row " + std::to_string(k) + ": recurrence fails at " + std::to_string(i));
        BigInt dim = 0;
        BigInt binom = 1;
        for (std::size_t i = 0; i <= k; ++i) {
            if (t.rows[k][i] < 0) fail("row " + std::to_string(k) + ": negative entry");
            dim += t.rows[k][i] * binom;
            binom = binom * BigInt(k - i) / BigInt(i + 1);
        }
        if (dim != N) fail("row " + std::to_string(k) + ": dimension identity fails");

        // b_k on the grid and matching the row.
        Rational expected_b = Rational(t.rows[k][k - 1], N);
        if (t.b[k - 1] != expected_b) fail("b " + std::to_string(k) + " != a_{k-1}^k / N_k");
        b_sum += t.b[k - 1];
        if (t.eps[k - 1] < 0) fail("eps " + std::to_string(k) + " negative");
    }
    if (b_sum > 1) fail("sum of b_k exceeds 1");

    // Iterated difference sequences of b stay nonnegative.
    std::vector<Rational> diff = t.b;
    while (diff.size() > 1) {
        std::vector<Rational> next;
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) {
            next.push_back(diff[i] - diff[i + 1]);
            if (next.back() < 0) fail("iterated b-differences go negative");
        }
        diff = next;
    }

    if (t.q >= 4) {
        // Reconstruct f_k from the stored eps's and check b_k = f_k + eps_k
        // together with the cond3 bound.
        const std::size_t depth = K;
        std::vector<Rational> qi(depth + 1);
        qi[0] = 1;
        for (std::size_t i = 1; i <= depth; ++i) qi[i] = qi[i - 1] / Rational(t.q);
        std::vector<std::vector<Rational>> c(depth + 1);
        for (std::size_t j = 1; j <= depth; ++j) {
            c[j].resize(j);
            for (std::size_t i = 1; i <= j; ++i) {
                Rational denom = qi[i];
                for (std::size_t tt = 1; tt <= j; ++tt) {
                    if (tt == i) continue;
                    denom *= (qi[i] - qi[tt]);
                }
                c[j][i - 1] = t.eps[j - 1] / denom;
            }
        }
        BigInt qk = 1;
        for (std::size_t k = 1; k <= depth; ++k) {
            qk *= t.q;
            Rational f = Rational(1) / Rational(qk - 1);
            for (std::size_t j = 1; j < k; ++j)
                for (std::size_t i = 1; i <= j; ++i) {
                    Rational qik = 1;
                    for (std::size_t e = 0; e < k; ++e) qik *= qi[i];
                    f += c[j][i - 1] * qik;
                }
            if (f + t.eps[k - 1] != t.b[k - 1])
                fail("b " + std::to_string(k) + " != f_k + eps_k");
            BigInt bound_den = (t.q - 1);
            for (std::size_t e = 0; e < k * k + 1; ++e) bound_den *= t.q;
            if (t.eps[k - 1] * Rational(bound_den) >= Rational(t.q - 2))
                fail("eps " + std::to_string(k) + " violates its bound");
        }
    } else {
        Rational pw = 1;
        for (std::size_t k = 1; k <= K; ++k) {
            pw /= Rational(t.q);
            if (t.b[k - 1] != pw) fail("b " + std::to_string(k) + " != q^-k (constant-n case)");
            if (t.eps[k - 1] != 0) fail("eps " + std::to_string(k) + " nonzero (constant-n case)");
        }
    }
    return rep;
}

std::string diagram_to_string(const EmbeddingDiagram& d) {
    std::ostringstream os;
    os << "diagram\n";
    os << "source: " << descriptor_to_line(d.source) << "\n";
    os << "target: " << descriptor_to_line(d.target) << "\n";
    for (const auto& L : d.levels)
        os << "level " << L.source_level << " " << L.target_level << " " << L.x << " " << L.y
           << " " << L.u << "\n";
    return os.str();
}

EmbeddingDiagram parse_diagram(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    EmbeddingDiagram out;
    bool saw_header = false, saw_source = false, saw_target = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "diagram") {
            saw_header = true;
        } else if (tok == "source:") {
            std::string rest;
            std::getline(ls, rest);
            out.source = parse_descriptor_line(rest, lineno);
            saw_source = true;
        } else if (tok == "target:") {
            std::string rest;
            std::getline(ls, rest);
            out.target = parse_descriptor_line(rest, lineno);
            saw_target = true;
        } else if (tok == "level") {
            DiagramLevel L;
            std::string i, k, x, y, u;
            if (!(ls >> i >> k >> x >> y >> u))
                throw ParseError("level line needs: i k x y u", lineno, 1);
            try {
                L.source_level = std::stoull(i);
                L.target_level = std::stoull(k);
                L.x = BigInt(x);
                L.y = BigInt(y);
                L.u = BigInt(u);
            } catch (const std::exception&) {
                throw ParseError("bad number in level line", lineno, 1);
            }
            out.levels.push_back(L);
        } else {
            throw ParseError("unknown diagram line '" + tok + "'", lineno, 1);
        }
    }
    if (!saw_header) throw ParseError("missing 'diagram' header", 1, 1);
    if (!saw_source || !saw_target) throw ParseError("missing source/target line", 1, 1);
    return out;
}

std::string triangle_to_string(const Triangle& t) {
    std::ostringstream os;
    os << "triangle\n";
    os << "q: " << t.q << "\n";
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
        os << "row " << k << ":";
        for (const auto& a : t.rows[k]) os << " " << a;
        os << "\n";
    }
    for (std::size_t k = 1; k <= t.b.size(); ++k)
        os << "b " << k << ": " << to_string(t.b[k - 1]) << "\n";
    for (std::size_t k = 1; k <= t.eps.size(); ++k)
        os << "eps " << k << ": " << to_string(t.eps[k - 1]) << "\n";
    return os.str();
}

Triangle parse_triangle(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    Triangle t;
    bool saw_header = false, saw_q = false;
    std::vector<std::vector<BigInt>> rows;
    std::map<std::size_t, Rational> bs, epss;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        try {
            if (tok == "triangle") {
                saw_header = true;
            } else if (tok == "q:") {
                std::string v;
                ls >> v;
                t.q = BigInt(v);
                saw_q = true;
            } else if (tok == "row") {
                std::string kc;
                ls >> kc;
                std::size_t k = std::stoull(kc);  // trailing ':' ignored by stoull
                std::vector<BigInt> row;
                std::string v;
                while (ls >> v) row.emplace_back(v);
                if (rows.size() != k) throw ParseError("rows out of order", lineno, 1);
                rows.push_back(std::move(row));
            } else if (tok == "b" || tok == "eps") {
                std::string kc, v;
                ls >> kc >> v;
                std::size_t k = std::stoull(kc);
                (tok == "b" ? bs : epss)[k] = parse_rational(v);
            } else {
                throw ParseError("unknown triangle line '" + tok + "'", lineno, 1);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad triangle line", lineno, 1);
        }
    }
    if (!saw_header) throw ParseError("missing 'triangle' header", 1, 1);
    if (!saw_q) throw ParseError("missing 'q:' line", 1, 1);
    t.rows = rows;
    const std::size_t K = rows.empty() ? 0 : rows.size() - 1;
    for (std::size_t k = 1; k <= K; ++k) {
        if (!bs.count(k)) throw ParseError("missing b " + std::to_string(k), 1, 1);
        t.b.push_back(bs[k]);
        t.eps.push_back(epss.count(k) ? epss[k] : Rational(0));
        if (k <= rows.size() - 1 && rows[k].size() == k + 1) {
            BigInt N = 1;
            // Group sizes from the dimension identity N_k = sum a_i^k C(k,i).
            BigInt dim = 0, binom = 1;
            for (std::size_t i = 0; i <= k; ++i) {
                dim += rows[k][i] * binom;
                binom = binom * BigInt(k - i) / BigInt(i + 1);
            }
            (void)N;
            BigInt prev_dim = 1;
            {
                BigInt d2 = 0, b2 = 1;
                for (std::size_t i = 0; i + 1 <= k; ++i) {
                    d2 += rows[k - 1][i] * b2;
                    b2 = b2 * BigInt(k - 1 - i) / BigInt(i + 1);
                }
                prev_dim = d2;
            }
            if (prev_dim == 0 || dim % prev_dim != 0)
                throw ParseError("row dimensions are not nested products", 1, 1);
            t.group_sizes.push_back(dim / prev_dim);
        }
    }
    return t;
}

}  // namespace dla
