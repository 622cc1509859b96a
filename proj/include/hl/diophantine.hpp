#ifndef HL_DIOPHANTINE_HPP
#define HL_DIOPHANTINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hl/numeric.hpp"

namespace hl::diophantine {

struct SmoothList {
  std::vector<u64> prime_basis;
  u64 bound;
  std::vector<u64> values;  // ascending, complete up to bound
};

SmoothList smooth_numbers(const std::vector<u64>& basis, u64 bound);

/// Solutions (i, X) of P(X(X+3i)) = 5 with 2 | X(X+3i), X > 80, 3 does not
/// divide X, 1 <= i <= 7 — found by pairing {2,5}-smooth numbers.
struct Upto7Solution {
  u64 i;
  u64 x;
};
std::vector<Upto7Solution> upto7_solutions(u64 x_bound);

/// Solutions of a^x + b^y = c^z with a,b,c in {2,3,5}, a < b, exponents in
/// [1, exp_bound]; reported as the power values.
struct NagellSolution {
  mpz_class ax;
  mpz_class by;
  mpz_class cz;
};
std::vector<NagellSolution> nagell_solutions(unsigned exp_bound);

/// A * base1^x - B * base2^y = C with 1 <= x, y <= exp_bound.
struct PowerEquation {
  mpz_class a = 1;
  u64 base1;
  mpz_class b = 1;
  u64 base2;
  mpz_class c;
  unsigned exp_bound = 200;
};
struct PowerSolution {
  unsigned x;
  unsigned y;
};
std::vector<PowerSolution> power_diff_solutions(const PowerEquation& eq);

/// Integer solutions of X^3 + A*Y^3 = B with |X|, |Y| <= box, by exact cube
/// testing.  Complete inside the box only.
struct ThueSolution {
  i64 x;
  i64 y;
};
std::vector<ThueSolution> thue_bounded(const mpz_class& a, const mpz_class& b,
                                       u64 box);

/// Per-prime requirement on ord_p(X*Y); max_ord = -1 means unbounded above.
struct OrdCondition {
  u64 prime;
  int min_ord;
  int max_ord = -1;
};

/// Keeps the solutions satisfying at least min_satisfied of the conditions.
std::vector<ThueSolution> valuation_filter(
    const std::vector<ThueSolution>& solutions,
    const std::vector<OrdCondition>& conditions, unsigned min_satisfied);

/// One instantiated cubic X^3 + A Y^3 = B derived from a two-power-base
/// difference equation, with the residual divisibility conditions its
/// solutions would have to meet.
struct ThueInstance {
  int row;  // 1..8
  std::string equation;
  mpz_class a;
  mpz_class b;
  std::vector<OrdCondition> conditions;
  unsigned min_satisfied;
};

/// All instantiations of the eight equation shapes over delta in {1,2},
/// c' in {0,1}, a', b' in {0,1,2}.
std::vector<ThueInstance> thue_table_instances();

}  // namespace hl::diophantine

#endif
