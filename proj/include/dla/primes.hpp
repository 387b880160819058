#pragma once

#include "dla/numeric.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace dla {

/// Incremental prime sieve shared by the factorization helpers.
/// nth(1) == 2.  All methods grow the sieve on demand.
class PrimeSieve {
public:
    std::uint64_t nth(std::size_t index_1based);
    bool is_prime(std::uint64_t n);
    /// Primes p with lo <= p <= hi in increasing order.
    std::vector<std::uint64_t> in_range(std::uint64_t lo, std::uint64_t hi);

private:
    void grow_until(std::uint64_t bound);
    std::vector<std::uint64_t> primes_{2, 3, 5, 7, 11, 13};
    std::uint64_t sieved_to_ = 13;
};

PrimeSieve& sieve();

/// Trial-division factorization of n >= 1 into prime -> exponent.
/// Inputs are contract-bounded to 64 bits; larger values are rejected.
std::map<std::uint64_t, std::uint64_t> factorize(const BigInt& n);

}  // namespace dla
