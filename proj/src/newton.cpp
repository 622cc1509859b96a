#include "hl/newton.hpp"

#include "hl/error.hpp"

namespace hl::irreducibility {

Valuation valuation(const mpz_class& p, const mpz_class& n) {
  if (p < 2) throw ArgumentError("valuation requires p >= 2");
  if (n == 0) return {true, 0};
  mpz_class a = abs(n);
  return {false, valuation_mpz(p, a)};
}

long NewtonPolygon::total_rise() const {
  if (edges.empty()) return 0;
  return static_cast<long>(edges.back().to.val.value) -
         static_cast<long>(edges.front().from.val.value);
}

NewtonPolygon newton_polygon(const std::vector<mpz_class>& coeffs,
                             const mpz_class& p) {
  if (coeffs.size() < 2) {
    throw ArgumentError("newton_polygon needs degree >= 1");
  }
  const std::size_t n = coeffs.size() - 1;
  if (coeffs[0] == 0 || coeffs[n] == 0) {
    throw ArgumentError("newton_polygon requires a_0 * a_n != 0");
  }

  NewtonPolygon np;
  np.prime = p;
  np.points.reserve(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    np.points.push_back({j, valuation(p, coeffs[n - j])});
  }

  // Monotone-chain lower hull over the finite points.  Popping on
  // non-right turns merges collinear runs, which is exactly the
  // "no two edges share a slope" convention.
  std::vector<ValuationPoint> hull;
  for (const auto& pt : np.points) {
    if (pt.val.infinite) continue;
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // cross of (b-a) x (pt-a); keep only strictly convex-down corners
      i128 cross = wide_mul(static_cast<i64>(b.index - a.index),
                            pt.val.value - a.val.value) -
                   wide_mul(static_cast<i64>(pt.index - a.index),
                            b.val.value - a.val.value);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }

  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    mpq_class slope(hull[i + 1].val.value - hull[i].val.value,
                    static_cast<long>(hull[i + 1].index - hull[i].index));
    slope.canonicalize();
    np.edges.push_back({hull[i], hull[i + 1], slope});
  }
  return np;
}

}  // namespace hl::irreducibility
