#include "dla/primes.hpp"

#include <algorithm>
#include <limits>

namespace dla {

void PrimeSieve::grow_until(std::uint64_t bound) {
    while (sieved_to_ < bound) {
        std::uint64_t n = sieved_to_ + 2;
        for (;; n += 2) {
            bool composite = false;
            for (std::uint64_t p : primes_) {
                if (p * p > n) break;
                if (n % p == 0) {
                    composite = true;
                    break;
                }
            }
            if (!composite) break;
        }
        primes_.push_back(n);
        sieved_to_ = n;
    }
}

std::uint64_t PrimeSieve::nth(std::size_t index_1based) {
    if (index_1based == 0) throw std::invalid_argument("prime index is 1-based");
    while (primes_.size() < index_1based) grow_until(sieved_to_ + 1);
    return primes_[index_1based - 1];
}

bool PrimeSieve::is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; p = (p == 2 ? 3 : p + 2)) {
        if (n % p == 0) return n == p;
    }
    return true;
}

std::vector<std::uint64_t> PrimeSieve::in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < 2) return out;
    grow_until(hi);
    auto it = std::lower_bound(primes_.begin(), primes_.end(), std::max<std::uint64_t>(lo, 2));
    for (; it != primes_.end() && *it <= hi; ++it) out.push_back(*it);
    return out;
}

PrimeSieve& sieve() {
    static PrimeSieve s;
    return s;
}

std::map<std::uint64_t, std::uint64_t> factorize(const BigInt& n) {
    if (n <= 0) throw std::invalid_argument("factorize: argument must be positive");
    if (n > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw std::invalid_argument("factorize: value exceeds 64 bits; supply it factored");
    std::uint64_t v = n.convert_to<std::uint64_t>();
    std::map<std::uint64_t, std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= v;) {
        if (v % p == 0) {
            std::uint64_t e = 0;
            while (v % p == 0) {
                v /= p;
                ++e;
            }
            out[p] = e;
        }
        p = (p == 2) ? 3 : p + 2;
    }
    if (v > 1) out[v] += 1;
    return out;
}

}  // namespace dla
