#ifndef HL_FACTOR_HPP
#define HL_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "hl/numeric.hpp"
#include "hl/primes.hpp"

namespace hl::factor {

struct PrimePower {
  mpz_class prime;
  int exponent;
};

using Factorization = std::vector<PrimePower>;

/// Complete factorization of a 64-bit integer (n >= 1).  Deterministic:
/// trial division by small primes, Miller-Rabin on the cofactor, Pollard
/// rho with fixed parameters for the rest.
std::vector<std::pair<u64, int>> factor_u64(u64 n);

/// Factorization of an arbitrary-precision integer: trial division by the
/// table primes, then a primality test on the cofactor.  A composite
/// cofactor beyond 64 bits is refused with CapacityError rather than
/// guessed at.
Factorization factor_mpz(const mpz_class& n, const primes::PrimeTable& table);

/// Greatest prime factor; gpf(1) = 1.
u64 gpf_u64(u64 n);
mpz_class gpf_mpz(const mpz_class& n, const primes::PrimeTable& table);

/// True when every prime factor of n is <= cap (n >= 1).
bool is_smooth_u64(u64 n, u64 cap);

/// Smallest-prime-factor sieve for bulk factoring of n <= limit.
class SmallFactorTable {
 public:
  explicit SmallFactorTable(u32 limit);
  u32 limit() const { return limit_; }
  u32 spf(u32 n) const { return spf_[n]; }
  std::vector<std::pair<u64, int>> factor(u32 n) const;
  std::vector<u32> distinct_primes(u32 n) const;

 private:
  u32 limit_;
  std::vector<u32> spf_;
};

/// Greatest prime factor of every integer in [lo, hi), computed segment-wise
/// so scans up to 1e9 stay memory-bounded.
std::vector<u32> gpf_range(u64 lo, u64 hi);

/// Ascending list of all integers <= bound whose prime factors lie in basis.
/// Heap-based merge generation; complete by construction.
std::vector<u64> enumerate_smooth(const std::vector<u64>& basis, u64 bound);

}  // namespace hl::factor

#endif
