#include "dla/steinitz.hpp"

#include "dla/primes.hpp"

#include <set>
#include <sstream>

namespace dla {

namespace {

// Union of the primes appearing as exceptions on either side.
std::set<std::uint64_t> joint_support(const SteinitzNumber& a, const SteinitzNumber& b) {
    std::set<std::uint64_t> s;
    for (const auto& [p, e] : a.exceptions()) s.insert(p);
    for (const auto& [p, e] : b.exceptions()) s.insert(p);
    return s;
}

}  // namespace

SteinitzNumber SteinitzNumber::from_integer(const BigInt& n) {
    SteinitzNumber out;
    for (const auto& [p, e] : factorize(n)) out.set_exponent(p, Exponent(e));
    return out;
}

SteinitzNumber SteinitzNumber::from_factors(const std::map<std::uint64_t, Exponent>& factors,
                                            Exponent default_exp) {
    SteinitzNumber out(default_exp);
    for (const auto& [p, e] : factors) {
        if (!sieve().is_prime(p)) throw std::invalid_argument("from_factors: base not prime");
        out.set_exponent(p, e);
    }
    return out;
}

std::string SteinitzNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : exceptions_) {
        if (!first) os << "*";
        first = false;
        os << p;
        if (e.is_inf())
            os << "^inf";
        else if (e.finite_value() != 1)
            os << "^" << e.finite_value();
    }
    if (first) os << "1";
    if (default_ != Exponent(0)) {
        os << " default ";
        if (default_.is_inf())
            os << "inf";
        else
            os << default_.finite_value();
    }
    return os.str();
}

SteinitzNumber stz_mul(const SteinitzNumber& a, const SteinitzNumber& b) {
    SteinitzNumber out(a.default_exponent() + b.default_exponent());
    for (std::uint64_t p : joint_support(a, b))
        out.set_exponent(p, a.exponent_of(p) + b.exponent_of(p));
    return out;
}

SteinitzNumber stz_mul_int(const SteinitzNumber& a, const BigInt& n) {
    return stz_mul(a, SteinitzNumber::from_integer(n));
}

bool divides(const SteinitzNumber& a, const SteinitzNumber& b) {
    if (!(a.default_exponent() <= b.default_exponent())) return false;
    for (std::uint64_t p : joint_support(a, b))
        if (!(a.exponent_of(p) <= b.exponent_of(p))) return false;
    return true;
}

SteinitzNumber quotst(const SteinitzNumber& b, const SteinitzNumber& a) {
    if (!divides(a, b)) throw NotDivisible("quotst: first argument not divisible by second");
    SteinitzNumber out(minus(b.default_exponent(), a.default_exponent()));
    for (std::uint64_t p : joint_support(a, b))
        out.set_exponent(p, minus(b.exponent_of(p), a.exponent_of(p)));
    return out;
}

SteinitzNumber stz_gcd(const SteinitzNumber& a, const SteinitzNumber& b) {
    SteinitzNumber out(min(a.default_exponent(), b.default_exponent()));
    for (std::uint64_t p : joint_support(a, b))
        out.set_exponent(p, min(a.exponent_of(p), b.exponent_of(p)));
    return out;
}

bool is_finite(const SteinitzNumber& a) {
    if (a.default_exponent() != Exponent(0)) return false;
    for (const auto& [p, e] : a.exceptions())
        if (e.is_inf()) return false;
    return true;
}

BigInt to_integer(const SteinitzNumber& a) {
    if (!is_finite(a)) throw NotFinite("to_integer: not a finite Steinitz number");
    BigInt out = 1;
    for (const auto& [p, e] : a.exceptions())
        for (std::uint64_t i = 0; i < e.finite_value(); ++i) out *= p;
    return out;
}

bool q_equivalent(const SteinitzNumber& a, const SteinitzNumber& b, Rational* witness) {
    if (a.default_exponent() != b.default_exponent()) return false;
    BigInt num = 1, den = 1;
    for (std::uint64_t p : joint_support(a, b)) {
        Exponent ea = a.exponent_of(p), eb = b.exponent_of(p);
        if (ea.is_inf() != eb.is_inf()) return false;
        if (ea.is_inf()) continue;
        std::uint64_t va = ea.finite_value(), vb = eb.finite_value();
        BigInt& side = (va > vb) ? num : den;
        std::uint64_t diff = (va > vb) ? va - vb : vb - va;
        for (std::uint64_t i = 0; i < diff; ++i) side *= p;
    }
    if (witness) *witness = Rational(num, den);
    return true;
}

bool ratio_contains(const Rational& q, const SteinitzNumber& a, const SteinitzNumber& b) {
    if (q <= 0) throw std::invalid_argument("ratio_contains: q must be positive");
    // Needed valuation of q at p, outside the both-infinite slack positions:
    //   v_p(q) = e_a(p) - e_b(p).
    auto support = joint_support(a, b);
    std::map<std::uint64_t, std::uint64_t> num_f = factorize(numerator(q));
    std::map<std::uint64_t, std::uint64_t> den_f = factorize(denominator(q));
    for (const auto& [p, e] : num_f) support.insert(p);
    for (const auto& [p, e] : den_f) support.insert(p);

    // Generic prime (outside every exception and outside q's support).
    if (a.default_exponent() != b.default_exponent() &&
        !(a.default_exponent().is_inf() && b.default_exponent().is_inf()))
        return false;

    for (std::uint64_t p : support) {
        Exponent ea = a.exponent_of(p), eb = b.exponent_of(p);
        if (ea.is_inf() && eb.is_inf()) continue;  // slack
        if (ea.is_inf() != eb.is_inf()) return false;
        long long va = static_cast<long long>(ea.finite_value());
        long long vb = static_cast<long long>(eb.finite_value());
        long long vq = 0;
        if (auto it = num_f.find(p); it != num_f.end()) vq += static_cast<long long>(it->second);
        if (auto it = den_f.find(p); it != den_f.end()) vq -= static_cast<long long>(it->second);
        if (va - vb != vq) return false;
    }
    return true;
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

std::string to_string(const RationalInterval& iv) {
    if (iv.is_point()) return to_string(iv.lo);
    return to_string(iv.lo) + ".." + to_string(iv.hi);
}

}  // namespace dla
