#pragma once

#include "dla/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace dla {

/// Exponent of a prime in a Steinitz number: a natural number or infinity.
/// Arithmetic follows the conventions INF + x = INF and INF - INF = 0.
class Exponent {
public:
    Exponent() : value_(0) {}
    explicit Exponent(std::uint64_t v) : value_(v) {}
    static Exponent inf() {
        Exponent e;
        e.infinite_ = true;
        return e;
    }

    bool is_inf() const { return infinite_; }
    std::uint64_t finite_value() const {
        if (infinite_) throw NotFinite("Exponent: infinite");
        return value_;
    }

    friend Exponent operator+(const Exponent& a, const Exponent& b) {
        if (a.infinite_ || b.infinite_) return inf();
        return Exponent(a.value_ + b.value_);
    }
    /// a - b under the convention INF - INF = 0, INF - finite = INF.
    friend Exponent minus(const Exponent& a, const Exponent& b) {
        if (a.infinite_) return b.infinite_ ? Exponent(0) : inf();
        if (b.infinite_ || b.value_ > a.value_) throw NotDivisible("exponent underflow");
        return Exponent(a.value_ - b.value_);
    }
    friend Exponent min(const Exponent& a, const Exponent& b) {
        if (a.infinite_) return b;
        if (b.infinite_) return a;
        return Exponent(std::min(a.value_, b.value_));
    }
    friend bool operator<=(const Exponent& a, const Exponent& b) {
        if (b.infinite_) return true;
        if (a.infinite_) return false;
        return a.value_ <= b.value_;
    }
    friend bool operator==(const Exponent& a, const Exponent& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }

private:
    std::uint64_t value_;
    bool infinite_ = false;
};

/// A Steinitz (supernatural) number: a formal product over all primes
/// p^e(p) with e(p) in N union {INF}.  Stored canonically as a finite
/// exception map plus a default exponent applied to every other prime;
/// the exception map never holds a value equal to the default.
class SteinitzNumber {
public:
    SteinitzNumber() = default;  // ONE: default exponent 0, no exceptions
    explicit SteinitzNumber(Exponent default_exp) : default_(default_exp) {}

    static SteinitzNumber one() { return SteinitzNumber(); }
    /// A positive 64-bit integer, factored by trial division.
    static SteinitzNumber from_integer(const BigInt& n);
    static SteinitzNumber from_factors(const std::map<std::uint64_t, Exponent>& factors,
                                       Exponent default_exp = Exponent(0));

    Exponent exponent_of(std::uint64_t prime) const {
        auto it = exceptions_.find(prime);
        return it == exceptions_.end() ? default_ : it->second;
    }
    const std::map<std::uint64_t, Exponent>& exceptions() const { return exceptions_; }
    Exponent default_exponent() const { return default_; }

    void set_exponent(std::uint64_t prime, Exponent e) {
        if (e == default_)
            exceptions_.erase(prime);
        else
            exceptions_[prime] = e;
    }

    bool operator==(const SteinitzNumber& o) const {
        return default_ == o.default_ && exceptions_ == o.exceptions_;
    }
    bool operator!=(const SteinitzNumber& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::map<std::uint64_t, Exponent> exceptions_;
    Exponent default_{0};
};

/// Pointwise exponent sum; infinity absorbs.
SteinitzNumber stz_mul(const SteinitzNumber& a, const SteinitzNumber& b);

/// True iff the exponent of a is <= that of b at every prime.
bool divides(const SteinitzNumber& a, const SteinitzNumber& b);

/// b / a by pointwise exponent difference; requires divides(a, b).
/// INF - INF = 0 by convention.
SteinitzNumber quotst(const SteinitzNumber& b, const SteinitzNumber& a);

/// Pointwise minimum of exponents.
SteinitzNumber stz_gcd(const SteinitzNumber& a, const SteinitzNumber& b);

bool is_finite(const SteinitzNumber& a);

/// The value as an ordinary integer; requires is_finite.
BigInt to_integer(const SteinitzNumber& a);

/// True iff a = q*b for some nonzero rational q.  Equivalently: equal
/// defaults, identical infinity positions, finitely many finite-exponent
/// differences.  When true and witness is non-null, *witness receives one
/// such q (the product of p^(e_a - e_b) over differing finite positions).
bool q_equivalent(const SteinitzNumber& a, const SteinitzNumber& b,
                  Rational* witness = nullptr);

/// Membership q in a/b, i.e. a = q*b: there is n with nq integral and
/// n*a = nq*b.  Decided prime-by-prime with slack exactly where both
/// sides carry an infinite exponent.  Requires q > 0.
bool ratio_contains(const Rational& q, const SteinitzNumber& a, const SteinitzNumber& b);

/// Multiply by a positive 64-bit integer (adds its factorization).
SteinitzNumber stz_mul_int(const SteinitzNumber& a, const BigInt& n);

}  // namespace dla
