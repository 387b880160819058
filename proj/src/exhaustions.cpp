#include "dla/exhaustions.hpp"

#include "dla/primes.hpp"

#include <algorithm>
#include <sstream>

namespace dla {

std::string to_string(AlgType t) {
    switch (t) {
        case AlgType::A: return "A";
        case AlgType::C: return "C";
        case AlgType::O: return "O";
    }
    return "?";
}

std::string to_string(DensityClass c) {
    switch (c) {
        case DensityClass::Sparse: return "sparse";
        case DensityClass::Dense: return "dense";
        case DensityClass::Pure: return "pure";
    }
    return "?";
}

std::string to_string(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::OneSided: return "one-sided";
        case SymmetryClass::TwoSidedSymmetric: return "two-sided-symmetric";
        case SymmetryClass::WeaklyNonSymmetric: return "weakly-non-symmetric";
        case SymmetryClass::StronglyNonSymmetric: return "strongly-non-symmetric";
    }
    return "?";
}

bool is_exact(const IndexValue& v) { return std::holds_alternative<Rational>(v); }

Rational lower_bound(const IndexValue& v) {
    if (auto* r = std::get_if<Rational>(&v)) return *r;
    return std::get<RationalInterval>(v).lo;
}

Rational upper_bound(const IndexValue& v) {
    if (auto* r = std::get_if<Rational>(&v)) return *r;
    return std::get<RationalInterval>(v).hi;
}

std::string to_string(const IndexValue& v) {
    if (auto* r = std::get_if<Rational>(&v)) return to_string(*r);
    return to_string(std::get<RationalInterval>(v));
}

SignatureTriple compose_signature(const SignatureTriple& sig1, const SignatureTriple& sig2,
                                  const BigInt& n1, const BigInt& n2, const BigInt& n3) {
    if (sig1.s() * n1 + sig1.z != n2)
        throw DimensionMismatch("compose_signature: n2 != s1*n1 + z1");
    if (sig2.s() * n2 + sig2.z != n3)
        throw DimensionMismatch("compose_signature: n3 != s2*n2 + z2");
    SignatureTriple out;
    out.l = sig1.l * sig2.l + sig1.r * sig2.r;
    out.r = sig1.l * sig2.r + sig1.r * sig2.l;
    out.z = n3 - out.s() * n1;
    return out;
}

namespace {

void validate_triple(const SignatureTriple& t, AlgType type, const char* where) {
    std::ostringstream os;
    if (t.l < 0 || t.r < 0 || t.z < 0) {
        os << where << ": negative signature entry";
        throw std::invalid_argument(os.str());
    }
    if (t.s() < 1) {
        os << where << ": l + r must be at least 1";
        throw std::invalid_argument(os.str());
    }
    if (t.l < t.r) {
        os << where << ": l < r violates the normalization";
        throw std::invalid_argument(os.str());
    }
    if (type != AlgType::A && t.r != 0) {
        os << where << ": r must be 0 for types C and O";
        throw std::invalid_argument(os.str());
    }
    if (t.s() == 1 && t.z == 0) {
        os << where << ": dimension would not grow (s = 1, z = 0)";
        throw std::invalid_argument(os.str());
    }
}

// The signature emitted by the tail at tail-local position j, given the
// current dimension n (only Proportional looks at n).
SignatureTriple tail_triple(const TailGenerator& tail, std::size_t j, const BigInt& n) {
    if (const auto* per = std::get_if<PeriodicTail>(&tail))
        return per->period[j % per->period.size()];
    if (const auto* pr = std::get_if<PrimeTail>(&tail)) {
        BigInt p(sieve().nth(pr->offset + j));
        return SignatureTriple{p, 0, 0};
    }
    const auto& prop = std::get<ProportionalTail>(tail);
    return SignatureTriple{prop.l, prop.r, prop.beta * n};
}

}  // namespace

void validate(const ExhaustionDescriptor& d) {
    if (d.n0 < 2) throw std::invalid_argument("descriptor: n0 must be at least 2");
    if (d.type == AlgType::C && d.n0 % 2 != 0)
        throw std::invalid_argument("descriptor: type C requires even n0");
    for (const auto& t : d.prefix) {
        validate_triple(t, d.type, "prefix");
        if (d.type == AlgType::C && t.z % 2 != 0)
            throw std::invalid_argument("descriptor: type C requires even z");
    }
    if (const auto* per = std::get_if<PeriodicTail>(&d.tail)) {
        if (per->period.empty()) throw std::invalid_argument("descriptor: empty period");
        for (const auto& t : per->period) {
            validate_triple(t, d.type, "tail");
            if (d.type == AlgType::C && t.z % 2 != 0)
                throw std::invalid_argument("descriptor: type C requires even z");
        }
    } else if (const auto* pr = std::get_if<PrimeTail>(&d.tail)) {
        if (pr->offset < 1) throw std::invalid_argument("descriptor: prime offset is 1-based");
    } else {
        const auto& prop = std::get<ProportionalTail>(d.tail);
        SignatureTriple probe{prop.l, prop.r, prop.beta};  // z-shape check only
        if (prop.beta < 0) throw std::invalid_argument("descriptor: negative beta");
        if (prop.l < 0 || prop.r < 0 || prop.l + prop.r < 1 || prop.l < prop.r)
            throw std::invalid_argument("descriptor: bad proportional signature");
        if (d.type != AlgType::A && prop.r != 0)
            throw std::invalid_argument("descriptor: r must be 0 for types C and O");
        if (prop.l + prop.r == 1 && prop.beta == 0)
            throw std::invalid_argument("descriptor: dimension would not grow");
        (void)probe;
    }
}

LevelWalker::LevelWalker(const ExhaustionDescriptor& d) : d_(&d) {
    validate(d);
    data_.n = d.n0;
    s_product_ = 1;
    c_over_s_ = 1;
    data_.sig = (d.prefix.empty()) ? tail_triple(d.tail, 0, data_.n) : d.prefix[0];
    data_.delta = 1;
    data_.sigma = 1;
}

void LevelWalker::advance() {
    const auto& sig = data_.sig;
    s_product_ *= sig.s();
    c_over_s_ *= Rational(sig.c(), sig.s());
    data_.n = sig.s() * data_.n + sig.z;
    ++index_;
    std::size_t i = index_;
    data_.sig = (i < d_->prefix.size())
                    ? d_->prefix[i]
                    : tail_triple(d_->tail, i - d_->prefix.size(), data_.n);
    data_.delta = Rational(d_->n0 * s_product_, data_.n);
    data_.sigma = c_over_s_;
}

LevelData derive_level(const ExhaustionDescriptor& d, std::size_t i) {
    LevelWalker w(d);
    while (w.index() < i) w.advance();
    return w.current();
}

SteinitzNumber stz_S(const ExhaustionDescriptor& d) {
    validate(d);
    SteinitzNumber out = SteinitzNumber::from_integer(d.n0);
    for (const auto& t : d.prefix) out = stz_mul_int(out, t.s());

    if (const auto* per = std::get_if<PeriodicTail>(&d.tail)) {
        BigInt product = 1;
        for (const auto& t : per->period) product *= t.s();
        for (const auto& [p, e] : factorize(product)) out.set_exponent(p, Exponent::inf());
    } else if (const auto* pr = std::get_if<PrimeTail>(&d.tail)) {
        // Every prime from the offset-th on occurs exactly once more.
        SteinitzNumber shifted(Exponent(1));
        for (std::uint64_t k = 1; k < pr->offset; ++k)
            shifted.set_exponent(sieve().nth(k), Exponent(0));
        out = stz_mul(out, shifted);
    } else {
        const auto& prop = std::get<ProportionalTail>(d.tail);
        BigInt s = prop.l + prop.r;
        if (s > 1)
            for (const auto& [p, e] : factorize(s)) out.set_exponent(p, Exponent::inf());
    }
    return out;
}

SteinitzNumber stz_C(const ExhaustionDescriptor& d) {
    if (d.type != AlgType::A) throw std::domain_error("stz_C: defined for type A only");
    auto [sym, sigma] = classify_symmetry(d);
    if (sym == SymmetryClass::TwoSidedSymmetric)
        throw std::domain_error("stz_C: undefined for symmetric exhaustions");
    if (sym == SymmetryClass::OneSided) return stz_S(d);

    SteinitzNumber out = SteinitzNumber::from_integer(d.n0);
    // Prefix levels with c = 0 are re-signatured to c = s; a change of
    // finitely many c values keeps all classification data intact.
    for (const auto& t : d.prefix) out = stz_mul_int(out, t.c() == 0 ? t.s() : t.c());

    if (const auto* per = std::get_if<PeriodicTail>(&d.tail)) {
        BigInt product = 1;
        for (const auto& t : per->period) product *= t.c();
        for (const auto& [p, e] : factorize(product)) out.set_exponent(p, Exponent::inf());
    } else {
        // PrimeTail is one-sided; Proportional with 0 < c < s remains.
        const auto& prop = std::get<ProportionalTail>(d.tail);
        BigInt c = prop.l - prop.r;
        if (c > 1)
            for (const auto& [p, e] : factorize(c)) out.set_exponent(p, Exponent::inf());
    }
    return out;
}

std::pair<SymmetryClass, Rational> classify_symmetry(const ExhaustionDescriptor& d) {
    validate(d);
    if (d.type != AlgType::A) return {SymmetryClass::OneSided, Rational(1)};

    bool has_zero = false, has_middle = false, all_onesided = true;
    auto scan = [&](const SignatureTriple& t) {
        if (t.c() == 0) has_zero = true;
        else if (t.c() < t.s()) has_middle = true;
        if (t.c() != t.s()) all_onesided = false;
    };
    if (const auto* per = std::get_if<PeriodicTail>(&d.tail)) {
        for (const auto& t : per->period) scan(t);
    } else if (std::holds_alternative<PrimeTail>(d.tail)) {
        // (p, 0, 0): c = s always.
    } else {
        const auto& prop = std::get<ProportionalTail>(d.tail);
        scan(SignatureTriple{prop.l, prop.r, 0});
    }

    if (all_onesided) return {SymmetryClass::OneSided, Rational(1)};
    if (has_zero) return {SymmetryClass::TwoSidedSymmetric, Rational(0)};
    (void)has_middle;
    // A generated tail with a periodic ratio c/s < 1 forces sigma = 0.
    return {SymmetryClass::WeaklyNonSymmetric, Rational(0)};
}

std::pair<DensityClass, IndexValue> classify_density(const ExhaustionDescriptor& d,
                                                     const Rational& precision) {
    validate(d);
    if (precision <= 0) throw std::invalid_argument("classify_density: precision must be positive");

    const std::size_t tail_start = d.prefix.size();

    if (std::holds_alternative<PrimeTail>(d.tail)) {
        LevelData ld = derive_level(d, tail_start);
        return {DensityClass::Pure, ld.delta};
    }
    if (const auto* prop = std::get_if<ProportionalTail>(&d.tail)) {
        if (prop->beta >= 1) return {DensityClass::Sparse, Rational(0)};
        LevelData ld = derive_level(d, tail_start);
        return {DensityClass::Pure, ld.delta};
    }

    const auto& per = std::get<PeriodicTail>(d.tail);
    BigInt period_product = 1;
    bool any_z = false;
    Rational z_over_s_sum = 0;  // sum of z/s over one period
    for (const auto& t : per.period) {
        period_product *= t.s();
        if (t.z > 0) any_z = true;
        z_over_s_sum += Rational(t.z, t.s());
    }
    if (!any_z) {
        LevelData ld = derive_level(d, tail_start);
        return {DensityClass::Pure, ld.delta};
    }
    if (period_product == 1) {
        // Dimension grows additively; delta -> 0 and S is finite.
        return {DensityClass::Sparse, Rational(0)};
    }

    // Dense: enclose delta.  From a period boundary J,
    //   delta >= delta_J * (1 - T_J),  T_J = (Z / n_J) * P/(P-1),
    // where Z = sum z/s over a period and P is the period product.
    const Rational geometric = Rational(period_product, period_product - 1);
    LevelWalker w(d);
    while (w.index() < tail_start) w.advance();
    for (int guard = 0; guard < 100000; ++guard) {
        const Rational delta_j = w.current().delta;
        const Rational tail_sum = z_over_s_sum * geometric / Rational(w.current().n);
        if (tail_sum < 1 && delta_j * tail_sum <= precision) {
            Rational lo = delta_j * (1 - tail_sum);
            return {DensityClass::Dense, RationalInterval(lo, delta_j)};
        }
        for (std::size_t t = 0; t < per.period.size(); ++t) w.advance();
    }
    throw std::logic_error("classify_density: interval refinement failed to converge");
}

AlgebraProfile profile_of(const ExhaustionDescriptor& d, const Rational& precision) {
    AlgebraProfile p;
    p.type = d.type;
    p.S = stz_S(d);
    auto [density, delta] = classify_density(d, precision);
    auto [symmetry, sigma] = classify_symmetry(d);
    p.density = density;
    p.delta = delta;
    p.symmetry = symmetry;
    p.sigma = sigma;
    p.finitary = is_finite(p.S);
    if (d.type == AlgType::A && symmetry != SymmetryClass::TwoSidedSymmetric)
        p.C = stz_C(d);
    p.source = d;
    return certify(p);
}

bool AlgebraProfile::same_data(const AlgebraProfile& o) const {
    if (source && o.source) return *source == *o.source;
    if (source || o.source) return false;
    return type == o.type && S == o.S && C == o.C && density == o.density &&
           symmetry == o.symmetry && delta == o.delta && sigma == o.sigma &&
           finitary == o.finitary;
}

AlgebraProfile certify(const AlgebraProfile& p) {
    auto fail = [](const std::string& what) { throw InconsistentProfile(what); };

    const bool delta_zero = is_exact(p.delta) && lower_bound(p.delta) == 0;
    if (lower_bound(p.delta) < 0 || upper_bound(p.delta) > 1)
        fail("delta must lie in [0, 1]");
    switch (p.density) {
        case DensityClass::Sparse:
            if (!delta_zero) fail("sparse requires delta = 0");
            break;
        case DensityClass::Pure:
            if (!is_exact(p.delta)) fail("pure requires an exact delta");
            if (lower_bound(p.delta) <= 0) fail("pure requires delta > 0");
            break;
        case DensityClass::Dense:
            if (lower_bound(p.delta) <= 0) fail("dense requires delta > 0");
            break;
    }

    if (lower_bound(p.sigma) < 0 || upper_bound(p.sigma) > 1)
        fail("sigma must lie in [0, 1]");
    switch (p.symmetry) {
        case SymmetryClass::OneSided:
            if (!is_exact(p.sigma) || lower_bound(p.sigma) != 1)
                fail("one-sided requires the normalized sigma = 1");
            break;
        case SymmetryClass::TwoSidedSymmetric:
            if (!is_exact(p.sigma) || lower_bound(p.sigma) != 0)
                fail("symmetric requires sigma = 0");
            if (!divides(SteinitzNumber::from_factors({{2, Exponent::inf()}}), p.S))
                fail("symmetric requires 2^inf to divide S");
            break;
        case SymmetryClass::WeaklyNonSymmetric:
            if (!is_exact(p.sigma) || lower_bound(p.sigma) != 0)
                fail("weakly non-symmetric requires sigma = 0");
            break;
        case SymmetryClass::StronglyNonSymmetric:
            if (lower_bound(p.sigma) <= 0) fail("strongly non-symmetric requires sigma > 0");
            break;
    }

    if (p.type != AlgType::A) {
        if (p.symmetry != SymmetryClass::OneSided) fail("types C and O are one-sided");
        if (p.C) fail("C is a type A datum");
    } else if (p.symmetry == SymmetryClass::WeaklyNonSymmetric ||
               p.symmetry == SymmetryClass::StronglyNonSymmetric) {
        if (!p.C) fail("two-sided non-symmetric profiles need C");
    }

    if (p.finitary != is_finite(p.S)) fail("finitary flag disagrees with S");
    if (p.finitary && p.density != DensityClass::Sparse) fail("finitary algebras are sparse");

    return p;
}

IndexValue delta_at_precision(const AlgebraProfile& p, const Rational& precision) {
    if (is_exact(p.delta) || !p.source) return p.delta;
    return classify_density(*p.source, precision).second;
}

}  // namespace dla
