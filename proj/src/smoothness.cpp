#include "hl/smoothness.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "hl/error.hpp"

namespace hl::smoothness {

ProgressionWindow::ProgressionWindow(mpz_class m_, int d_, u64 k_)
    : m(std::move(m_)), d(d_), k(k_) {
  if (d != 2 && d != 3) throw ArgumentError("window step d must be 2 or 3");
  if (k < 2) throw ArgumentError("window length k must be >= 2");
  if (m <= 0) throw ArgumentError("window start m must be positive");
  if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(d))) {
    throw ArgumentError("window requires gcd(m, d) = 1");
  }
}

mpz_class ProgressionWindow::product() const {
  mpz_class prod = 1;
  for (u64 i = 0; i < k; ++i) prod *= term(i);
  return prod;
}

WindowFactorization factor_window(const ProgressionWindow& window,
                                  const primes::PrimeTable& table) {
  WindowFactorization out{window, {}};
  out.per_term.reserve(window.k);
  for (u64 i = 0; i < window.k; ++i) {
    mpz_class t = window.term(i);
    out.per_term.push_back({t, factor::factor_mpz(t, table)});
  }
  return out;
}

mpz_class gpf(const ProgressionWindow& window, const primes::PrimeTable& table) {
  mpz_class best = 1;
  for (u64 i = 0; i < window.k; ++i) {
    mpz_class g = factor::gpf_mpz(window.term(i), table);
    if (g > best) best = g;
  }
  return best;
}

bool violates_gpf_bound(const mpz_class& gpf_value, const mpz_class& m, int d,
                        u64 k) {
  if (d == 3) return gpf_value <= 3 * mpz_class(static_cast<unsigned long>(k));
  // d = 2: threshold 3.5k when m <= 2.5k, else 4k; exact rational compares.
  if (2 * m <= 5 * mpz_class(static_cast<unsigned long>(k))) {
    return 2 * gpf_value <= 7 * mpz_class(static_cast<unsigned long>(k));
  }
  return gpf_value <= 4 * mpz_class(static_cast<unsigned long>(k));
}

namespace {

void scan_chunk(int d, u64 k_min, u64 k_max, u64 lo, u64 hi,
                std::vector<SearchHit>& hits) {
  if (lo >= hi) return;
  u64 term_hi = hi + static_cast<u64>(d) * (k_max - 1) + 1;
  std::vector<u32> g = factor::gpf_range(lo, term_hi);
  for (u64 m = lo; m < hi; ++m) {
    if (m % static_cast<u64>(d) == 0) continue;
    u64 running = 0;
    for (u64 k = 1; k <= k_max; ++k) {
      running = std::max<u64>(running, g[m + static_cast<u64>(d) * (k - 1) - lo]);
      if (k < std::max<u64>(k_min, 2)) continue;
      if (m <= static_cast<u64>(d) * k) continue;
      bool violation;
      if (d == 3) {
        violation = running <= 3 * k;
      } else if (2 * m <= 5 * k) {
        violation = 2 * running <= 7 * k;
      } else {
        violation = running <= 4 * k;
      }
      if (violation) hits.push_back({m, k, running});
    }
  }
}

}  // namespace

std::vector<SearchHit> exceptional_search(int d, u64 k_min, u64 k_max,
                                          u64 m_max, unsigned jobs) {
  if (d != 2 && d != 3) throw ArgumentError("exceptional_search: d in {2,3}");
  if (k_min < 2 || k_max < k_min) throw ArgumentError("exceptional_search: need 2 <= k_min <= k_max");
  if (jobs == 0) jobs = 1;

  // Segment the m-range; each chunk is pure and merged deterministically.
  constexpr u64 kChunk = 1 << 20;
  std::vector<std::pair<u64, u64>> chunks;
  for (u64 lo = 1; lo <= m_max; lo += kChunk) {
    chunks.emplace_back(lo, std::min(m_max, lo + kChunk - 1) + 1);
  }

  std::vector<std::vector<SearchHit>> partial(chunks.size());
  if (jobs == 1) {
    for (std::size_t i = 0; i < chunks.size(); ++i) {
      scan_chunk(d, k_min, k_max, chunks[i].first, chunks[i].second, partial[i]);
    }
  } else {
    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex mu;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i;
          {
            std::lock_guard<std::mutex> lock(mu);
            if (next >= chunks.size()) return;
            i = next++;
          }
          scan_chunk(d, k_min, k_max, chunks[i].first, chunks[i].second,
                     partial[i]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<SearchHit> hits;
  for (auto& p : partial) hits.insert(hits.end(), p.begin(), p.end());
  std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
    return a.k != b.k ? a.k < b.k : a.m < b.m;
  });
  return hits;
}

std::vector<u64> cor24_search(u64 k) {
  if (k < 2) throw ArgumentError("cor24_search requires k >= 2");
  std::vector<u64> out;
  for (u64 m = 2 * k + 1; m < 4 * k; m += 2) {
    u64 running = 0;
    for (u64 i = 0; i < k; ++i) {
      running = std::max(running, factor::gpf_u64(m + 2 * i));
    }
    bool violation =
        (2 * m <= 5 * k) ? (2 * running <= 7 * k) : (running <= 4 * k);
    if (violation) out.push_back(m);
  }
  return out;
}

SurvivorSet deletion_survivors(const ProgressionWindow& window, int D,
                               const primes::PrimeTable& table) {
  if (D != 3 && D != 4) throw ArgumentError("deletion_survivors: D in {3,4}");
  WindowFactorization wf = factor_window(window, table);

  // prime -> (max valuation, smallest index attaining it)
  std::map<mpz_class, std::pair<int, u64>> best;
  mpz_class bound = mpz_class(static_cast<unsigned long>(D)) *
                    static_cast<unsigned long>(window.k);
  for (u64 i = 0; i < window.k; ++i) {
    for (const auto& pp : wf.per_term[i].factors) {
      if (pp.prime > bound) continue;
      auto it = best.find(pp.prime);
      if (it == best.end() || pp.exponent > it->second.first) {
        best[pp.prime] = {pp.exponent, i};
      }
    }
  }

  SurvivorSet s{window, D, {}, {}, 0, 1};
  std::set<u64> deleted_idx;
  for (const auto& [p, ve] : best) {
    s.deleted[p] = ve.second;
    deleted_idx.insert(ve.second);
  }
  for (u64 i = 0; i < window.k; ++i) {
    if (!deleted_idx.count(i)) s.survivors.push_back(wf.per_term[i].term);
  }
  s.t0 = static_cast<long>(window.k) - static_cast<long>(table.pi(
             mpz_get_ui(bound.get_mpz_t())));
  long take = std::min<long>(s.t0 + 1, static_cast<long>(s.survivors.size()));
  for (long i = 0; i < take; ++i) s.product *= s.survivors[i];
  return s;
}

bool survivor_product_bound_check(const SurvivorSet& s) {
  if (s.t0 < 0 && !s.survivors.empty()) {
    throw DomainError("survivor bound needs t0 >= 0 or an empty survivor set");
  }
  const u64 k = s.window.k;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), k - 1);
  u64 ord = primes::ord_factorial(static_cast<u64>(s.window.d), k - 1);
  mpz_class dpow;
  mpz_ui_pow_ui(dpow.get_mpz_t(), static_cast<unsigned long>(s.window.d), ord);
  // d^ord divides (k-1)! exactly
  mpz_class ceiling = fact / dpow;
  return s.product <= ceiling;
}

std::optional<std::vector<u64>> grimm_matching(u64 m, u64 l,
                                               const factor::SmallFactorTable& spf) {
  if (l == 0) throw ArgumentError("grimm_matching: l >= 1");
  if (m + l > spf.limit()) throw RangeError("grimm_matching beyond factor table");
  std::vector<std::vector<u32>> cand(l);
  for (u64 i = 1; i <= l; ++i) {
    u64 n = m + i;
    if (is_prime_u64(n)) {
      throw DomainError("grimm_matching requires a run of composites");
    }
    cand[i - 1] = spf.distinct_primes(static_cast<u32>(n));
  }

  // Kuhn's augmenting paths; the runs are short so this is plenty.
  std::map<u32, long> owner;  // prime -> term index
  std::vector<u64> assigned(l, 0);

  std::function<bool(u64, std::set<u32>&)> augment = [&](u64 i,
                                                         std::set<u32>& seen) {
    for (u32 p : cand[i]) {
      if (seen.count(p)) continue;
      seen.insert(p);
      auto it = owner.find(p);
      if (it == owner.end() || augment(static_cast<u64>(it->second), seen)) {
        owner[p] = static_cast<long>(i);
        assigned[i] = p;
        return true;
      }
    }
    return false;
  };

  for (u64 i = 0; i < l; ++i) {
    std::set<u32> seen;
    if (!augment(i, seen)) return std::nullopt;
  }
  return assigned;
}

NorpkResult norpk_check(u64 m, u64 k) {
  if (m % 2 == 0) throw ArgumentError("norpk_check: m must be odd");
  if (m <= 4 * k) throw ArgumentError("norpk_check requires m > 4k");
  for (u64 i = 0; i < k; ++i) {
    if (is_prime_u64(m + 2 * i)) {
      return {NorpkStatus::gpf_gt_4k, m + 2 * i};
    }
  }
  std::set<u64> distinct;
  for (u64 i = 0; i < k; ++i) {
    for (auto [p, e] : factor::factor_u64(m + 2 * i)) distinct.insert(p);
  }
  if (distinct.size() < k) {
    throw DomainError("norpk dichotomy violated: omega < k with no prime term");
  }
  return {NorpkStatus::omega_ge_k_thus_p_k1, distinct.size()};
}

std::vector<u64> lehmer_style_search(const LehmerSearchOptions& opts) {
  if (opts.offsets.empty()) throw ArgumentError("lehmer search needs offsets");
  if (opts.lo > opts.hi) throw ArgumentError("lehmer search needs lo <= hi");
  u64 max_off = *std::max_element(opts.offsets.begin(), opts.offsets.end());

  std::vector<u64> basis;
  for (u64 p = 2; p <= opts.prime_cap; ++p) {
    if (is_prime_u64(p)) basis.push_back(p);
  }
  std::vector<u64> smooth = factor::enumerate_smooth(basis, opts.hi + max_off);
  std::set<u64> smooth_set(smooth.begin(), smooth.end());

  std::vector<u64> out;
  u64 off0 = opts.offsets.front();
  for (u64 s : smooth) {
    if (s < off0) continue;
    u64 x = s - off0;
    if (x < opts.lo || x > opts.hi || x == 0) continue;
    if (opts.odd_only && x % 2 == 0) continue;
    if (opts.forbidden_residue_mod3 >= 0 &&
        x % 3 == static_cast<u64>(opts.forbidden_residue_mod3)) {
      continue;
    }
    bool ok = true;
    for (std::size_t j = 1; j < opts.offsets.size(); ++j) {
      if (!smooth_set.count(x + opts.offsets[j])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hl::smoothness
