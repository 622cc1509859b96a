#ifndef HL_NUMERIC_HPP
#define HL_NUMERIC_HPP

#include <cstdint>
#include <optional>

#include <gmpxx.h>

namespace hl {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(u64 n);

/// Trial-division primality, used as an independent oracle in tests.
bool is_prime_trial(u64 n);

/// Exponent of p in n (n > 0).  valuation(p, 0) is the caller's problem;
/// the polynomial layer keeps its own infinity marker.
int valuation_u64(u64 p, u64 n);
long valuation_mpz(const mpz_class& p, const mpz_class& n);

/// Largest r with r^3 <= n (n >= 0).
u64 icbrt_u64(u64 n);
i128 icbrt_i128(i128 n);  // sign-preserving exact cube root floor toward zero
/// Exact cube root: returns r with r^3 == n, if one exists.
std::optional<i128> exact_cbrt_i128(i128 n);

/// floor(sqrt(n)) without floating-point rounding surprises.
u64 isqrt_u64(u64 n);

/// Kahan compensated accumulator in extended precision.
class KahanSum {
 public:
  void add(long double x) {
    long double y = x - c_;
    long double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  long double value() const { return s_; }

 private:
  long double s_ = 0.0L;
  long double c_ = 0.0L;
};

/// gcd for plain integers (n may be 0).
u64 gcd_u64(u64 a, u64 b);

/// a*b as i128 for readability at call sites.
inline i128 wide_mul(i64 a, i64 b) { return static_cast<i128>(a) * b; }

}  // namespace hl

#endif
