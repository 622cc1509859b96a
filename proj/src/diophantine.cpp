#include "hl/diophantine.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "hl/error.hpp"
#include "hl/factor.hpp"

namespace hl::diophantine {

SmoothList smooth_numbers(const std::vector<u64>& basis, u64 bound) {
  SmoothList out{basis, bound, factor::enumerate_smooth(basis, bound)};
  std::sort(out.prime_basis.begin(), out.prime_basis.end());
  return out;
}

std::vector<Upto7Solution> upto7_solutions(u64 x_bound) {
  if (x_bound < 81) throw ArgumentError("upto7_solutions: x_bound >= 81");
  // 3 never divides X or X+3i here, so both factors are {2,5}-smooth.
  std::vector<u64> smooth = factor::enumerate_smooth({2, 5}, x_bound + 21);
  std::set<u64> in(smooth.begin(), smooth.end());

  std::vector<Upto7Solution> sols;
  for (u64 x : smooth) {
    if (x <= 80 || x > x_bound || x % 3 == 0) continue;
    for (u64 i = 1; i <= 7; ++i) {
      u64 y = x + 3 * i;
      if (!in.count(y)) continue;
      bool even = (x % 2 == 0) || (y % 2 == 0);
      bool five = (x % 5 == 0) || (y % 5 == 0);
      if (even && five) sols.push_back({i, x});
    }
  }
  std::sort(sols.begin(), sols.end(), [](const auto& a, const auto& b) {
    return a.i != b.i ? a.i < b.i : a.x < b.x;
  });
  return sols;
}

std::vector<NagellSolution> nagell_solutions(unsigned exp_bound) {
  if (exp_bound < 7) throw ArgumentError("nagell_solutions: exp_bound >= 7");
  std::vector<NagellSolution> out;
  const u64 bases[] = {2, 3, 5};
  for (u64 a : bases) {
    for (u64 b : bases) {
      if (a >= b) continue;
      for (u64 c : bases) {
        // a^x + b^y = c^z
        mpz_class ax = 1;
        for (unsigned x = 1; x <= exp_bound; ++x) {
          ax *= static_cast<unsigned long>(a);
          mpz_class by = 1;
          for (unsigned y = 1; y <= exp_bound; ++y) {
            by *= static_cast<unsigned long>(b);
            mpz_class sum = ax + by;
            // is sum a pure power of c with exponent in range?
            mpz_class t = sum;
            unsigned z = 0;
            while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(c))) {
              mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(),
                              static_cast<unsigned long>(c));
              ++z;
            }
            if (t == 1 && z >= 1 && z <= exp_bound) {
              out.push_back({ax, by, sum});
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const NagellSolution& l,
                                       const NagellSolution& r) {
    if (l.cz != r.cz) return l.cz < r.cz;
    return l.ax < r.ax;
  });
  return out;
}

std::vector<PowerSolution> power_diff_solutions(const PowerEquation& eq) {
  if (eq.exp_bound > 200) throw ArgumentError("power_diff: exponent bound <= 200");
  std::vector<PowerSolution> out;
  mpz_class p1 = 1;
  for (unsigned x = 1; x <= eq.exp_bound; ++x) {
    p1 *= static_cast<unsigned long>(eq.base1);
    // B * base2^y = A * base1^x - C
    mpz_class t = eq.a * p1 - eq.c;
    if (t <= 0) continue;
    if (!mpz_divisible_p(t.get_mpz_t(), eq.b.get_mpz_t())) continue;
    t /= eq.b;
    unsigned y = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(eq.base2))) {
      mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(),
                      static_cast<unsigned long>(eq.base2));
      ++y;
    }
    if (t == 1 && y >= 1 && y <= eq.exp_bound) out.push_back({x, y});
  }
  return out;
}

std::vector<ThueSolution> thue_bounded(const mpz_class& a, const mpz_class& b,
                                       u64 box) {
  if (a <= 0 || b <= 0) throw ArgumentError("thue_bounded: A, B positive");
  if (box > 10'000'000) throw ArgumentError("thue_bounded: box <= 1e7");
  if (!a.fits_slong_p() || !b.fits_slong_p()) {
    throw CapacityError("thue_bounded: coefficients beyond 64-bit fast path");
  }
  const i128 ia = static_cast<i64>(a.get_si());
  const i128 ib = static_cast<i64>(b.get_si());
  const i64 sbox = static_cast<i64>(box);

  std::vector<ThueSolution> out;
  for (i64 y = -sbox; y <= sbox; ++y) {
    i128 rhs = ib - ia * (static_cast<i128>(y) * y * y);
    auto x = exact_cbrt_i128(rhs);
    if (!x) continue;
    if (*x < -static_cast<i128>(sbox) || *x > static_cast<i128>(sbox)) continue;
    out.push_back({static_cast<i64>(*x), y});
  }
  std::sort(out.begin(), out.end(), [](const ThueSolution& l,
                                       const ThueSolution& r) {
    return l.x != r.x ? l.x < r.x : l.y < r.y;
  });
  return out;
}

std::vector<ThueSolution> valuation_filter(
    const std::vector<ThueSolution>& solutions,
    const std::vector<OrdCondition>& conditions, unsigned min_satisfied) {
  std::vector<ThueSolution> out;
  for (const auto& s : solutions) {
    i64 prod = s.x * s.y;
    unsigned hit = 0;
    for (const auto& c : conditions) {
      int v;
      if (prod == 0) {
        v = std::numeric_limits<int>::max();  // ord of 0: every power divides
      } else {
        v = valuation_u64(c.prime, static_cast<u64>(prod < 0 ? -prod : prod));
      }
      bool ok = v >= c.min_ord && (c.max_ord < 0 || v <= c.max_ord);
      if (ok) ++hit;
    }
    if (hit >= min_satisfied) out.push_back(s);
  }
  return out;
}

std::vector<ThueInstance> thue_table_instances() {
  std::vector<ThueInstance> out;
  auto pw = [](u64 base, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
  };
  const std::vector<OrdCondition> two_of = {{2, 2, -1}, {5, 1, -1}, {7, 1, -1}};

  // rows (i)-(iv): c = 0,1 (mod 3); a'/b' lift the equation to cubes
  for (unsigned cp = 0; cp <= 1; ++cp) {
    for (unsigned ap = 0; ap <= 2; ++ap) {
      out.push_back({1, "2^a - 5*7^c = +-3", 5 * pw(2, ap) * pw(7, cp),
                     3 * pw(2, ap), two_of, 2});
      out.push_back({2, "5*2^a - 7^c = +-3", 25 * pw(2, ap) * pw(7, cp),
                     75 * pw(2, ap), two_of, 2});
    }
    for (unsigned delta = 1; delta <= 2; ++delta) {
      for (unsigned bp = 0; bp <= 2; ++bp) {
        out.push_back({3, "5^b - 2^delta*7^c = +-3",
                       pw(2, delta) * pw(5, bp) * pw(7, cp), 3 * pw(5, bp),
                       two_of, 2});
        out.push_back({4, "2^delta*5^b - 7^c = +-3",
                       pw(2, 3 - delta) * pw(5, bp) * pw(7, cp),
                       pw(2, 3 - delta) * pw(5, bp) * 3, two_of, 2});
      }
    }
  }
  // rows (v)-(viii): c = 2 (mod 3)
  for (unsigned ap = 0; ap <= 2; ++ap) {
    out.push_back({5, "2^a - 5*7^c = +-3", 175 * pw(2, ap), 525, two_of, 2});
    out.push_back({6, "5*2^a - 7^c = +-3", 35 * pw(2, ap), 21,
                   {{2, 1, -1}, {7, 1, -1}}, 2});
  }
  for (unsigned delta = 1; delta <= 2; ++delta) {
    for (unsigned bp = 0; bp <= 2; ++bp) {
      out.push_back({7, "5^b - 2^delta*7^c = +-3",
                     pw(2, 3 - delta) * pw(5, bp) * 7, 21 * pw(2, 3 - delta),
                     two_of, 2});
      out.push_back({8, "2^delta*5^b - 7^c = +-3", pw(2, delta) * pw(5, bp) * 7,
                     21, {{2, 0, 0}, {7, 1, -1}}, 2});
    }
  }
  return out;
}

}  // namespace hl::diophantine
