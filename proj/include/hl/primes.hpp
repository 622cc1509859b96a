#ifndef HL_PRIMES_HPP
#define HL_PRIMES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hl/numeric.hpp"

namespace hl::primes {

/// Immutable ascending table of all primes <= limit.  Safe to share across
/// threads once built; every query is pure.
class PrimeTable {
 public:
  static constexpr u64 kMaxLimit = 1'000'000'000;

  /// Segmented sieve of Eratosthenes.  2 <= limit <= kMaxLimit.
  static PrimeTable sieve(u64 limit);

  u64 limit() const { return limit_; }
  std::span<const u32> primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  u32 operator[](std::size_t i) const { return primes_[i]; }

  /// Membership (n <= limit required).
  bool contains(u64 n) const;

  /// pi(x): number of primes <= x.  x <= limit required.
  u64 pi(u64 x) const;

  /// nth prime, 1-indexed.  Throws RangeError past the table.
  u64 nth_prime(u64 i) const;

 private:
  PrimeTable(u64 limit, std::vector<u32> primes)
      : limit_(limit), primes_(std::move(primes)) {}

  u64 limit_;
  std::vector<u32> primes_;
};

/// theta(x) = sum of log p over primes p <= x, compensated long double sum.
long double theta(u64 x, const PrimeTable& table);

/// pi(x; mu, l): primes p <= x with p = l (mod mu).  gcd(l, mu) = 1 required.
u64 pi_ap(u64 x, u64 mu, u64 l, const PrimeTable& table);

/// theta(x; mu, l): same restriction for the log-weighted count.
long double theta_ap(u64 x, u64 mu, u64 l, const PrimeTable& table);

/// ith prime congruent to l mod mu (1-indexed).
u64 nth_prime_ap(u64 i, u64 mu, u64 l, const PrimeTable& table);

/// Largest gap between consecutive primes of the class with the smaller
/// endpoint <= limit, plus that endpoint.
struct GapResult {
  u64 max_gap;
  u64 witness_prime;
};
GapResult max_gap_ap(u64 limit, u64 mu, u64 l, const PrimeTable& table);

/// Smallest prime in the open interval (a, b), if any.
std::optional<u64> prime_in_interval(long double a, long double b,
                                     const PrimeTable& table);

enum class EstimateKind {
  dusart_pi_upper,
  dusart_theta_lower,
  dusart_theta_upper,
  ramare_rumely_lower,
  ramare_rumely_upper,
};

struct EstimateProfile {
  EstimateKind kind;
  long double nu0 = 0.0L;  // Ramare-Rumely variants only
};

/// Evaluated closed form plus the distance from the validity boundary.
/// Callers treat |margin| < 1e-9 as indeterminate.
struct EstimateValue {
  long double value;
  long double margin;
};

EstimateValue estimate_value(const EstimateProfile& profile, long double x);

/// ord_p(k!) by Legendre's formula, and its closed-form lower bound
/// (k-p)/(p-1) - log(k-1)/log p (requires p < k for the bound).
u64 ord_factorial(u64 p, u64 k);
long double ord_factorial_lower_bound(u64 p, u64 k);

/// Stirling-type bracket: lower < k! < upper for k > 1.
struct FactorialBounds {
  long double lower;
  long double upper;
  long double log_lower;  // natural logs, safe for large k
  long double log_upper;
};
FactorialBounds factorial_bounds(u64 k);

}  // namespace hl::primes

#endif
