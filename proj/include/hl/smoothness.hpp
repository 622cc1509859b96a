#ifndef HL_SMOOTHNESS_HPP
#define HL_SMOOTHNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hl/factor.hpp"
#include "hl/numeric.hpp"
#include "hl/primes.hpp"

namespace hl::smoothness {

/// The k-term product m(m+d)...(m+(k-1)d) with d in {2,3} and gcd(m,d)=1.
struct ProgressionWindow {
  mpz_class m;
  int d;
  u64 k;

  ProgressionWindow(mpz_class m_, int d_, u64 k_);
  mpz_class term(u64 i) const { return m + mpz_class(static_cast<long>(d)) * static_cast<unsigned long>(i); }
  mpz_class product() const;
};

struct TermFactorization {
  mpz_class term;
  factor::Factorization factors;
};

struct WindowFactorization {
  ProgressionWindow window;
  std::vector<TermFactorization> per_term;
};

WindowFactorization factor_window(const ProgressionWindow& window,
                                  const primes::PrimeTable& table);

/// Greatest prime factor of the window product.
mpz_class gpf(const ProgressionWindow& window, const primes::PrimeTable& table);

/// Exact comparison gpf <= threshold, where the threshold is 3.5k / 4k / 3k
/// depending on d and the position of m (3.5k handled as the rational 7k/2).
bool violates_gpf_bound(const mpz_class& gpf_value, const mpz_class& m, int d,
                        u64 k);

struct SearchHit {
  u64 m;
  u64 k;
  u64 gpf;
};

/// All (m, k) with k_min <= k <= k_max, d-coprime m, dk < m <= m_max whose
/// window fails the greatest-prime-factor bound.  Sorted by (k, m).
std::vector<SearchHit> exceptional_search(int d, u64 k_min, u64 k_max,
                                          u64 m_max, unsigned jobs = 1);

/// d=2 violations in the band 2k < m < 4k.
std::vector<u64> cor24_search(u64 k);

/// Outcome of deleting, for each prime p <= Dk dividing the product, one term
/// of maximal p-adic valuation.
struct SurvivorSet {
  ProgressionWindow window;
  int D;
  std::map<mpz_class, u64> deleted;   // prime -> deleted index
  std::vector<mpz_class> survivors;   // surviving terms, ascending
  long t0;                            // k - pi(Dk)
  mpz_class product;                  // over the min(t0+1, |survivors|) smallest
};

SurvivorSet deletion_survivors(const ProgressionWindow& window, int D,
                               const primes::PrimeTable& table);

/// Exact check of the survivor-product ceiling
/// product <= (k-1)! * d^(-ord_d((k-1)!)).
bool survivor_product_bound_check(const SurvivorSet& s);

/// Assignment of distinct primes P_i | (m+i) for a run of composites
/// m+1..m+l, found by bipartite matching; nullopt when no system exists.
std::optional<std::vector<u64>> grimm_matching(u64 m, u64 l,
                                               const factor::SmallFactorTable& spf);

enum class NorpkStatus { gpf_gt_4k, omega_ge_k_thus_p_k1 };

struct NorpkResult {
  NorpkStatus status;
  u64 witness;  // a prime term, or omega of the product
};

/// Classifies a d=2 window with m > 4k: either some term is prime (so the
/// greatest prime factor beats 4k) or all terms are composite and the product
/// has at least k distinct prime factors.
NorpkResult norpk_check(u64 m, u64 k);

struct LehmerSearchOptions {
  u64 lo = 1;
  u64 hi;
  u64 prime_cap;
  std::vector<u64> offsets;
  bool odd_only = false;
  int forbidden_residue_mod3 = -1;  // -1: no residue filter
};

/// All X in [lo, hi] passing the side conditions with every X+offset
/// prime_cap-smooth.  Driven by complete smooth enumeration, so the scan
/// cost depends on the smooth count, not on hi.
std::vector<u64> lehmer_style_search(const LehmerSearchOptions& opts);

}  // namespace hl::smoothness

#endif
