#include "hl/irreducibility.hpp"

#include "hl/error.hpp"
#include "hl/factor.hpp"
#include "hl/smoothness.hpp"

namespace hl::irreducibility {

namespace {

bool is_power_of_two(const mpz_class& m) {
  if (m < 1) return false;
  return mpz_popcount(m.get_mpz_t()) == 1;
}

/// Configurations where the witness search is known to come up empty and a
/// separate argument is required: degree-1 shapes whose anchor is a 2-power
/// (d=3) or u >= 1 (d=2), and the small-window degree-2 shapes.
bool cataloged_exception(const gpoly::GPolySpec& spec, u64 k,
                         const mpz_class& m) {
  if (spec.d == 3 && spec.u == 0) {
    if (k == 1 && is_power_of_two(m)) return true;
    if (k == 2 && spec.alpha == 2 && m == 125) return true;
    return false;
  }
  if (spec.d == 2) {
    if (k == 1 && spec.u >= 1) return true;
    if (k == 2) {
      if (spec.u == 1 && m == 25) return true;
      if (spec.u == 2 && (m == 25 || m == 243)) return true;
    }
  }
  return false;
}

}  // namespace

ExclusionResult exclusion_criterion(const gpoly::GPolySpec& spec, u64 k,
                                    const primes::PrimeTable& table) {
  if (k < 1 || 2 * k > spec.n) {
    throw ArgumentError("exclusion criterion covers 1 <= k <= n/2");
  }
  if (k == 1 && spec.u == 0 && spec.d > 2 * spec.alpha + 2) {
    throw DomainError("criterion inapplicable: d > 2*alpha + 2 at (k,u)=(1,0)");
  }

  mpz_class m = mpz_class(spec.alpha) +
                mpz_class(static_cast<unsigned long>(spec.n + spec.u - k)) *
                    spec.d;
  mpz_class threshold = mpz_class(static_cast<unsigned long>(k + spec.u - 1)) *
                            spec.d +
                        spec.alpha + (spec.u > 0 ? 1 : 2);
  mpz_class outer = spec.a[0] * spec.a[spec.n];

  mpz_class best = 0;
  for (u64 i = 0; i < k; ++i) {
    mpz_class term = m + mpz_class(static_cast<unsigned long>(i)) * spec.d;
    for (const auto& pp : factor::factor_mpz(term, table)) {
      if (pp.prime < threshold) continue;
      if (mpz_divisible_p(outer.get_mpz_t(), pp.prime.get_mpz_t())) continue;
      if (pp.prime > best) best = pp.prime;
    }
  }

  if (best > 0) {
    return {k, ExclusionStatus::excluded, best, "witness prime found"};
  }
  if (cataloged_exception(spec, k, m)) {
    return {k, ExclusionStatus::exception_flagged, std::nullopt,
            "criterion silent on a cataloged shape"};
  }
  return {k, ExclusionStatus::indeterminate, std::nullopt,
          "no qualifying prime divides the window"};
}

std::vector<ExclusionResult> full_exclusion_scan(const gpoly::GPolySpec& spec,
                                                 const primes::PrimeTable& table) {
  std::vector<ExclusionResult> out;
  for (u64 k = 1; 2 * k <= spec.n; ++k) {
    out.push_back(exclusion_criterion(spec, k, table));
  }
  return out;
}

}  // namespace hl::irreducibility
