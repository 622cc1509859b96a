#include "hl/factor.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "hl/error.hpp"

namespace hl::factor {

namespace {

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  // Brent's cycle variant with fixed increments keeps the result
  // deterministic for a given n.
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 power = 1, lam = 1;
    auto f = [n, c](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      if (power == lam) {
        x = y;
        power <<= 1;
        lam = 0;
      }
      y = f(y);
      ++lam;
      u64 diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      d = gcd_u64(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_u64_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_u64_rec(d, out);
  factor_u64_rec(n / d, out);
}

}  // namespace

namespace {

// Shared read-only table for the hot small-number paths.
const SmallFactorTable& small_spf() {
  static const SmallFactorTable table(1 << 21);
  return table;
}

}  // namespace

std::vector<std::pair<u64, int>> factor_u64(u64 n) {
  if (n == 0) throw ArgumentError("factor_u64(0)");
  if (n < (1 << 21)) return small_spf().factor(static_cast<u32>(n));
  std::vector<u64> primes;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull, 41ull, 43ull, 47ull}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_u64_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, int>> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

Factorization factor_mpz(const mpz_class& n, const primes::PrimeTable& table) {
  if (n <= 0) throw ArgumentError("factor_mpz requires n >= 1");
  if (n.fits_ulong_p() || mpz_sizeinbase(n.get_mpz_t(), 2) <= 63) {
    Factorization out;
    for (auto [p, e] : factor_u64(mpz_get_ui(n.get_mpz_t()))) {
      out.push_back({mpz_class(static_cast<unsigned long>(p)), e});
    }
    return out;
  }

  Factorization out;
  mpz_class rest = n;
  for (u32 p : table.primes()) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      out.push_back({mpz_class(p), e});
    }
    if (rest == 1) return out;
    if (mpz_sizeinbase(rest.get_mpz_t(), 2) <= 63) break;
  }
  if (rest != 1) {
    if (mpz_sizeinbase(rest.get_mpz_t(), 2) <= 63) {
      for (auto [p, e] : factor_u64(mpz_get_ui(rest.get_mpz_t()))) {
        out.push_back({mpz_class(static_cast<unsigned long>(p)), e});
      }
    } else if (mpz_probab_prime_p(rest.get_mpz_t(), 50) > 0) {
      out.push_back({rest, 1});
    } else {
      throw CapacityError(
          "composite cofactor beyond 64 bits and beyond the trial-division table");
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePower& a, const PrimePower& b) {
              return a.prime < b.prime;
            });
  return out;
}

u64 gpf_u64(u64 n) {
  if (n == 0) throw ArgumentError("gpf_u64(0)");
  if (n == 1) return 1;
  auto fs = factor_u64(n);
  return fs.back().first;
}

mpz_class gpf_mpz(const mpz_class& n, const primes::PrimeTable& table) {
  if (n == 1) return 1;
  return factor_mpz(n, table).back().prime;
}

bool is_smooth_u64(u64 n, u64 cap) {
  if (n == 0) throw ArgumentError("is_smooth_u64(0)");
  for (u64 p = 2; p <= cap && p * p <= n; p = (p == 2 ? 3 : p + 2)) {
    while (n % p == 0) n /= p;
  }
  return n <= cap;
}

SmallFactorTable::SmallFactorTable(u32 limit) : limit_(limit), spf_(limit + 1) {
  std::iota(spf_.begin(), spf_.end(), 0u);
  for (u64 i = 2; i * i <= limit; ++i) {
    if (spf_[i] == i) {
      for (u64 j = i * i; j <= limit; j += i) {
        if (spf_[j] == j) spf_[j] = static_cast<u32>(i);
      }
    }
  }
}

std::vector<std::pair<u64, int>> SmallFactorTable::factor(u32 n) const {
  if (n == 0 || n > limit_) throw ArgumentError("SmallFactorTable::factor range");
  std::vector<std::pair<u64, int>> out;
  while (n > 1) {
    u32 p = spf_[n];
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  return out;
}

std::vector<u32> SmallFactorTable::distinct_primes(u32 n) const {
  if (n == 0 || n > limit_) throw ArgumentError("SmallFactorTable range");
  std::vector<u32> out;
  while (n > 1) {
    u32 p = spf_[n];
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

std::vector<u32> gpf_range(u64 lo, u64 hi) {
  if (lo >= hi) return {};
  if (lo < 1) throw ArgumentError("gpf_range starts at 1");
  std::size_t len = static_cast<std::size_t>(hi - lo);
  std::vector<u32> gpf(len, 1);
  std::vector<u64> rem(len);
  for (std::size_t i = 0; i < len; ++i) rem[i] = lo + i;

  u64 root = isqrt_u64(hi - 1);
  // small primes up to sqrt: plain sieve
  std::vector<char> is_p(root + 1, 1);
  for (u64 i = 2; i * i <= root; ++i) {
    if (is_p[i]) {
      for (u64 j = i * i; j <= root; j += i) is_p[j] = 0;
    }
  }
  for (u64 p = 2; p <= root; ++p) {
    if (!is_p[p]) continue;
    u64 start = (lo + p - 1) / p * p;
    for (u64 n = start; n < hi; n += p) {
      std::size_t i = static_cast<std::size_t>(n - lo);
      while (rem[i] % p == 0) rem[i] /= p;
      gpf[i] = static_cast<u32>(p);  // ascending p: last write is largest
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (rem[i] > 1) gpf[i] = static_cast<u32>(rem[i]);
  }
  if (lo == 1) gpf[0] = 1;
  return gpf;
}

std::vector<u64> enumerate_smooth(const std::vector<u64>& basis, u64 bound) {
  if (basis.empty()) throw ArgumentError("smooth basis must be nonempty");
  if (bound < 1) throw ArgumentError("smooth bound must be >= 1");
  std::vector<u64> sorted_basis = basis;
  std::sort(sorted_basis.begin(), sorted_basis.end());
  sorted_basis.erase(std::unique(sorted_basis.begin(), sorted_basis.end()),
                     sorted_basis.end());
  for (u64 p : sorted_basis) {
    if (p < 2 || !is_prime_u64(p)) {
      throw ArgumentError("smooth basis elements must be prime");
    }
  }

  std::priority_queue<u64, std::vector<u64>, std::greater<>> heap;
  heap.push(1);
  std::vector<u64> out;
  while (!heap.empty()) {
    u64 v = heap.top();
    heap.pop();
    while (!heap.empty() && heap.top() == v) heap.pop();
    out.push_back(v);
    for (u64 p : sorted_basis) {
      if (v <= bound / p) heap.push(v * p);
    }
  }
  return out;
}

}  // namespace hl::factor
