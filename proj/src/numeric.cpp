#include "hl/numeric.hpp"

#include <cmath>

namespace hl {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // These bases decide primality for every n < 2^64 (Sorenson & Webster).
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_prime_trial(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (u64 f = 5; f * f <= n; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

int valuation_u64(u64 p, u64 n) {
  int v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

long valuation_mpz(const mpz_class& p, const mpz_class& n) {
  mpz_class q, r, m = n;
  long v = 0;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    if (r != 0) return v;
    m = q;
    ++v;
  }
}

u64 isqrt_u64(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n && (r + 1) != 0) ++r;
  return r;
}

u64 icbrt_u64(u64 n) {
  u64 r = static_cast<u64>(std::cbrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) * (r + 1) <= n) ++r;
  return r;
}

i128 icbrt_i128(i128 n) {
  bool neg = n < 0;
  u128 m = neg ? static_cast<u128>(-n) : static_cast<u128>(n);
  // Seed from a double estimate, correct exactly.
  u128 r = static_cast<u128>(std::cbrt(static_cast<double>(m)));
  while (r > 0 && r * r * r > m) --r;
  while ((r + 1) * (r + 1) * (r + 1) <= m) ++r;
  return neg ? -static_cast<i128>(r) : static_cast<i128>(r);
}

std::optional<i128> exact_cbrt_i128(i128 n) {
  i128 r = icbrt_i128(n);
  if (r * r * r == n) return r;
  if (n < 0) {
    // floor moved toward zero for negatives; check the next one down
    i128 s = r - 1;
    if (s * s * s == n) return s;
  }
  return std::nullopt;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace hl
