#ifndef HL_NEWTON_HPP
#define HL_NEWTON_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "hl/numeric.hpp"

namespace hl::irreducibility {

/// p-adic valuation; infinite marks a zero coefficient.
struct Valuation {
  bool infinite = false;
  long value = 0;
};

Valuation valuation(const mpz_class& p, const mpz_class& n);

/// Point j carries the valuation of the coefficient of x^(n-j), so the
/// left end describes the leading coefficient.
struct ValuationPoint {
  u64 index;
  Valuation val;
};

struct NewtonEdge {
  ValuationPoint from;
  ValuationPoint to;
  mpq_class slope;
};

/// Lower convex hull of the finite valuation points, edges merged so slopes
/// strictly increase left to right.
struct NewtonPolygon {
  mpz_class prime;
  std::vector<ValuationPoint> points;
  std::vector<NewtonEdge> edges;

  /// ord_p(a_0) - ord_p(a_n): the total rise along the path.
  long total_rise() const;
};

/// coeffs holds a_0 .. a_n; requires a_0 * a_n != 0.
NewtonPolygon newton_polygon(const std::vector<mpz_class>& coeffs,
                             const mpz_class& p);

}  // namespace hl::irreducibility

#endif
