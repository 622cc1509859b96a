#ifndef HL_IRREDUCIBILITY_HPP
#define HL_IRREDUCIBILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hl/gpoly.hpp"
#include "hl/newton.hpp"
#include "hl/primes.hpp"

namespace hl::irreducibility {

enum class ExclusionStatus { excluded, exception_flagged, indeterminate };

struct ExclusionResult {
  u64 k;
  ExclusionStatus status;
  std::optional<mpz_class> witness_prime;
  std::string reason;
};

/// Degree-k factor exclusion: looks for a prime p dividing the k-term
/// product starting at m = alpha + (n+u-k)d with p not dividing a_0*a_n and
///   p >= (k+u-1)d + alpha + 1   (u > 0)
///   p >= (k+u-1)d + alpha + 2   (u = 0).
/// Returns the largest qualifying witness.  When no witness exists the
/// configuration is either one of the cataloged exceptional shapes
/// (exception_flagged) or simply out of the criterion's reach
/// (indeterminate).
ExclusionResult exclusion_criterion(const gpoly::GPolySpec& spec, u64 k,
                                    const primes::PrimeTable& table);

/// Per-k classification for k = 1..floor(n/2).
std::vector<ExclusionResult> full_exclusion_scan(const gpoly::GPolySpec& spec,
                                                 const primes::PrimeTable& table);

}  // namespace hl::irreducibility

#endif
