#ifndef HL_GPOLY_HPP
#define HL_GPOLY_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "hl/numeric.hpp"

namespace hl::gpoly {

/// Parameters (n, u, alpha, d, a_0..a_n) of the polynomial
///   a_n x^n + a_{n-1}(alpha+(n-1+u)d) x^{n-1} + ...
///     + a_j (prod_{i=j}^{n-1} (alpha+(i+u)d)) x^j + ...
/// for q = u + alpha/d.  Requires d in {2,3}, 1 <= alpha < d, gcd(alpha,d)=1,
/// a_0 * a_n != 0.
struct GPolySpec {
  u64 n;
  u64 u;
  int alpha;
  int d;
  std::vector<mpz_class> a;  // a_0 .. a_n

  GPolySpec(u64 n_, u64 u_, int alpha_, int d_, std::vector<mpz_class> a_);

  /// Convenience: all interior coefficients 1, a_0 = a0, a_n = an.
  static GPolySpec with_unit_coeffs(u64 n, u64 u, int alpha, int d,
                                    mpz_class a0 = 1, mpz_class an = 1);
};

/// c_0 .. c_n with c_j = a_j * prod_{i=j}^{n-1} (alpha + (i+u)d), c_n = a_n.
std::vector<mpz_class> build_coefficients(const GPolySpec& spec);

/// Irreducible-factor degrees of the reduction mod p.  usable is false when
/// p divides the leading coefficient or the reduction is not squarefree;
/// in the usable case the degrees sum to n.
struct DegreeCertificate {
  u64 prime;
  std::vector<u64> degrees;  // ascending, with multiplicity
  bool usable;
};

/// coeffs holds c_0..c_n; p prime, p <= 1e4.
DegreeCertificate degree_multiset_mod_p(const std::vector<mpz_class>& coeffs,
                                        u64 p);

enum class DegreeAbsence { certified_absent, inconclusive };

/// Tries odd primes not dividing the leading coefficient until one usable
/// certificate has no sub-multiset of factor degrees summing to k.
DegreeAbsence no_factor_of_degree(const std::vector<mpz_class>& coeffs, u64 k,
                                  unsigned prime_budget = 25);

/// All rational roots (lowest terms), found by divisor enumeration of the
/// outer coefficients and confirmed by exact evaluation.
std::vector<mpq_class> rational_linear_factors(
    const std::vector<mpz_class>& coeffs);

/// Distinct-degree split of the squarefree reduction mod p, exposed so tests
/// can confirm the product of the parts reconstructs the reduction.
/// Each entry is (degree, product of the irreducible factors of that degree).
std::vector<std::pair<u64, std::vector<u64>>> ddf_components(
    const std::vector<mpz_class>& coeffs, u64 p);

}  // namespace hl::gpoly

#endif
