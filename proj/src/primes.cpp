#include "hl/primes.hpp"

#include <algorithm>
#include <cmath>

#include "hl/error.hpp"

namespace hl::primes {

namespace {
constexpr u64 kSegmentSize = 1 << 20;
}

PrimeTable PrimeTable::sieve(u64 limit) {
  if (limit < 2 || limit > kMaxLimit) {
    throw CapacityError("sieve limit must lie in [2, 1e9]");
  }

  u64 root = isqrt_u64(limit);
  std::vector<char> small(root + 1, 1);
  for (u64 i = 2; i * i <= root; ++i) {
    if (small[i]) {
      for (u64 j = i * i; j <= root; j += i) small[j] = 0;
    }
  }
  std::vector<u32> base;
  for (u64 i = 2; i <= root; ++i) {
    if (small[i]) base.push_back(static_cast<u32>(i));
  }

  std::vector<u32> primes;
  primes.reserve(static_cast<std::size_t>(
      limit > 16 ? 1.2 * limit / std::log(static_cast<double>(limit)) : 8));

  std::vector<char> seg(kSegmentSize);
  for (u64 low = 2; low <= limit; low += kSegmentSize) {
    u64 high = std::min(low + kSegmentSize - 1, limit);
    std::fill(seg.begin(), seg.begin() + (high - low + 1), 1);
    for (u32 p : base) {
      u64 p2 = static_cast<u64>(p) * p;
      if (p2 > high) break;
      u64 start = std::max(p2, (low + p - 1) / p * p);
      for (u64 j = start; j <= high; j += p) seg[j - low] = 0;
    }
    for (u64 n = low; n <= high; ++n) {
      if (seg[n - low]) primes.push_back(static_cast<u32>(n));
    }
  }
  return PrimeTable(limit, std::move(primes));
}

bool PrimeTable::contains(u64 n) const {
  if (n > limit_) throw RangeError("membership query beyond table limit");
  return std::binary_search(primes_.begin(), primes_.end(), n);
}

u64 PrimeTable::pi(u64 x) const {
  if (x > limit_) throw RangeError("pi(x) beyond table limit");
  return static_cast<u64>(
      std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

u64 PrimeTable::nth_prime(u64 i) const {
  if (i == 0 || i > primes_.size()) {
    throw RangeError("nth_prime index outside table");
  }
  return primes_[i - 1];
}

namespace {

void check_class(u64 mu, u64 l) {
  if (mu < 2 || l == 0 || l >= mu || gcd_u64(l, mu) != 1) {
    throw ArgumentError("residue class requires 1 <= l < mu, gcd(l, mu) = 1");
  }
}

}  // namespace

long double theta(u64 x, const PrimeTable& table) {
  if (x > table.limit()) throw RangeError("theta(x) beyond table limit");
  KahanSum s;
  for (u32 p : table.primes()) {
    if (p > x) break;
    s.add(std::log(static_cast<long double>(p)));
  }
  return s.value();
}

u64 pi_ap(u64 x, u64 mu, u64 l, const PrimeTable& table) {
  check_class(mu, l);
  if (x > table.limit()) throw RangeError("pi_ap beyond table limit");
  u64 count = 0;
  for (u32 p : table.primes()) {
    if (p > x) break;
    if (p % mu == l) ++count;
  }
  return count;
}

long double theta_ap(u64 x, u64 mu, u64 l, const PrimeTable& table) {
  check_class(mu, l);
  if (x > table.limit()) throw RangeError("theta_ap beyond table limit");
  KahanSum s;
  for (u32 p : table.primes()) {
    if (p > x) break;
    if (p % mu == l) s.add(std::log(static_cast<long double>(p)));
  }
  return s.value();
}

u64 nth_prime_ap(u64 i, u64 mu, u64 l, const PrimeTable& table) {
  check_class(mu, l);
  if (i == 0) throw ArgumentError("nth_prime_ap is 1-indexed");
  u64 seen = 0;
  for (u32 p : table.primes()) {
    if (p % mu == l && ++seen == i) return p;
  }
  throw CapacityError("prime table exhausted before the requested class prime");
}

GapResult max_gap_ap(u64 limit, u64 mu, u64 l, const PrimeTable& table) {
  check_class(mu, l);
  u64 prev = 0;
  bool open = false;  // prev <= limit still awaiting its successor
  GapResult best{0, 0};
  for (u32 p : table.primes()) {
    if (p % mu != l) continue;
    if (prev != 0) {
      u64 gap = p - prev;
      if (gap > best.max_gap) best = {gap, prev};
    }
    if (p > limit) {
      open = false;
      break;
    }
    prev = p;
    open = true;
  }
  if (open) {
    throw CapacityError("table ends before the successor of the last class prime <= limit");
  }
  if (best.witness_prime == 0) {
    throw RangeError("fewer than two class primes available up to limit");
  }
  return best;
}

std::optional<u64> prime_in_interval(long double a, long double b,
                                     const PrimeTable& table) {
  if (!(a < b)) throw ArgumentError("prime_in_interval requires a < b");
  if (b > static_cast<long double>(table.limit()) + 1.0L) {
    throw RangeError("interval end beyond table limit");
  }
  auto ps = table.primes();
  auto it = std::lower_bound(ps.begin(), ps.end(), a,
                             [](u32 p, long double bound) {
                               return static_cast<long double>(p) <= bound;
                             });
  if (it != ps.end() && static_cast<long double>(*it) < b) return *it;
  return std::nullopt;
}

EstimateValue estimate_value(const EstimateProfile& profile, long double x) {
  switch (profile.kind) {
    case EstimateKind::dusart_pi_upper: {
      if (x <= 1.0L) throw DomainError("dusart_pi_upper requires x > 1");
      long double lg = std::log(x);
      return {x / lg * (1.0L + 1.2762L / lg), x - 1.0L};
    }
    case EstimateKind::dusart_theta_lower: {
      if (x <= 1.0L) throw DomainError("dusart_theta_lower requires x > 1");
      long double lg = std::log(x);
      return {x * (1.0L - 3.965L / (lg * lg)), x - 1.0L};
    }
    case EstimateKind::dusart_theta_upper: {
      if (x <= 1.0L) throw DomainError("dusart_theta_upper requires x > 1");
      return {1.00008L * x, x - 1.0L};
    }
    case EstimateKind::ramare_rumely_lower:
    case EstimateKind::ramare_rumely_upper: {
      long double nu0 = profile.nu0;
      if (nu0 <= 0.0L || nu0 > 1e10L) {
        throw DomainError("ramare_rumely requires 0 < nu0 <= 1e10");
      }
      if (x < nu0) throw DomainError("ramare_rumely requires x >= nu0");
      long double eps =
          x >= 1e10L ? 0.002238L : 2.0L * 1.798158L / std::sqrt(nu0);
      long double sign =
          profile.kind == EstimateKind::ramare_rumely_lower ? -1.0L : 1.0L;
      return {x / 2.0L * (1.0L + sign * eps), x - nu0};
    }
  }
  throw ArgumentError("unknown estimate kind");
}

u64 ord_factorial(u64 p, u64 k) {
  if (p < 2) throw ArgumentError("ord_factorial requires a prime p >= 2");
  u64 total = 0;
  for (u64 q = p; q <= k; q *= p) {
    total += k / q;
    if (q > k / p) break;  // q*p would overflow past k anyway
  }
  return total;
}

long double ord_factorial_lower_bound(u64 p, u64 k) {
  if (k <= 1 || p >= k) {
    throw DomainError("lower bound printed for k > 1 and p < k");
  }
  long double kp = static_cast<long double>(k) - static_cast<long double>(p);
  return kp / (static_cast<long double>(p) - 1.0L) -
         std::log(static_cast<long double>(k - 1)) /
             std::log(static_cast<long double>(p));
}

FactorialBounds factorial_bounds(u64 k) {
  if (k <= 1) throw DomainError("factorial bounds printed for k > 1");
  long double kk = static_cast<long double>(k);
  long double base = 0.5L * std::log(2.0L * 3.141592653589793238462643383279502884L * kk) - kk + kk * std::log(kk);
  long double lo = base + 1.0L / (12.0L * kk + 1.0L);
  long double hi = base + 1.0L / (12.0L * kk);
  return {std::exp(lo), std::exp(hi), lo, hi};
}

}  // namespace hl::primes
