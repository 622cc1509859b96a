#ifndef HL_INEQUALITIES_HPP
#define HL_INEQUALITIES_HPP

#include <cstdint>

#include <gmpxx.h>

#include "hl/numeric.hpp"
#include "hl/primes.hpp"

namespace hl::smoothness {

/// Shared data for the counting-argument inequalities: v = m/(dk) as an
/// exact rational, with D = 4 when d = 2 and D = 3 when d = 3.
/// Requires v*d >= D and k >= pi(Dk); outside that range the monotonicity
/// chain breaks down and construction refuses.
struct InequalityContext {
  int d;
  int D;
  mpq_class v;
  u64 k;

  InequalityContext(int d_, mpq_class v_, u64 k_,
                    const primes::PrimeTable& table);

  u64 pi_dk = 0;  // pi(D*k), cached from the table
};

/// Exact test of d^pi(Dk) >= d^(k+1) * d^ord_d((k-1)!) * (vk)^(k+1-pi(Dk)) / (k-1)!.
bool check_e0(const InequalityContext& ctx);

/// Margins in extended precision: positive means the printed inequality
/// holds, negative means it fails; |margin| < 1e-9 is indeterminate.
long double check_e3(const InequalityContext& ctx);
long double check_e4(const InequalityContext& ctx);

/// Same quantity as check_e4 but independent of the context/table (no pi
/// needed): used by the k0 scan.
long double e4_rhs(int d, long double v, u64 k);

/// Least k0 >= k1(v) at which the k-side of the fourth inequality turns
/// positive and provably stays positive (checked on a sampled grid up to
/// 10*k0).  Requires v*d >= D.
u64 find_k0(const mpq_class& v, int d, u64 scan_cap = 1'000'000);

/// Sufficient gap condition d(k-1)/m > theta1/theta2 - 1 with the constants
/// frozen at scale nu0 (defaults: 6450 for d=3, 1e10 for d=2).
bool theta_gap_criterion(u64 m, int d, u64 k, long double nu0);

}  // namespace hl::smoothness

#endif
