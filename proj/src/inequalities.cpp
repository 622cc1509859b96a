#include "hl/inequalities.hpp"

#include <cmath>

#include "hl/error.hpp"

namespace hl::smoothness {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;
constexpr long double kE = 2.718281828459045235360287471352662498L;

long double to_ld(const mpq_class& q) {
  return static_cast<long double>(q.get_num().get_d()) /
         static_cast<long double>(q.get_den().get_d());
}

// d^(d/(d-1)) and d^(2/(d-1)) for d in {2, 3}
long double d_pow_dd1(int d) { return d == 2 ? 4.0L : std::pow(3.0L, 1.5L); }
long double d_pow_2d1(int d) { return d == 2 ? 4.0L : 3.0L; }

}  // namespace

InequalityContext::InequalityContext(int d_, mpq_class v_, u64 k_,
                                     const primes::PrimeTable& table)
    : d(d_), D(d_ == 2 ? 4 : 3), v(std::move(v_)), k(k_) {
  if (d != 2 && d != 3) throw ArgumentError("inequality context: d in {2,3}");
  if (k < 2) throw ArgumentError("inequality context: k >= 2");
  if (v * d < D) {
    throw DomainError("inequality context requires v*d >= D");
  }
  pi_dk = table.pi(static_cast<u64>(D) * k);
  if (k < pi_dk) {
    throw DomainError("inequality context requires k >= pi(Dk)");
  }
}

bool check_e0(const InequalityContext& ctx) {
  const u64 k = ctx.k;
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), k - 1);
  u64 ord = primes::ord_factorial(static_cast<u64>(ctx.d), k - 1);

  mpz_class d_lhs, d_rhs;
  mpz_ui_pow_ui(d_lhs.get_mpz_t(), static_cast<unsigned long>(ctx.d), ctx.pi_dk);
  mpz_ui_pow_ui(d_rhs.get_mpz_t(), static_cast<unsigned long>(ctx.d),
                k + 1 + ord);

  // vk = v * k, exponent k + 1 - pi(Dk) >= 1 under the context invariant.
  mpq_class vk = ctx.v * static_cast<unsigned long>(k);
  unsigned long e = static_cast<unsigned long>(k + 1 - ctx.pi_dk);
  mpq_class vk_pow;
  mpz_pow_ui(mpq_numref(vk_pow.get_mpq_t()), mpq_numref(vk.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(vk_pow.get_mpq_t()), mpq_denref(vk.get_mpq_t()), e);
  vk_pow.canonicalize();

  // d^pi(Dk) >= d^(k+1+ord) * vk^e / (k-1)!
  mpq_class lhs = mpq_class(d_lhs) * mpq_class(fact);
  mpq_class rhs = mpq_class(d_rhs) * vk_pow;
  return lhs >= rhs;
}

long double check_e3(const InequalityContext& ctx) {
  long double v = to_ld(ctx.v);
  long double k = static_cast<long double>(ctx.k);
  long double d = static_cast<long double>(ctx.d);
  long double num = k * std::log(kE * v * d_pow_dd1(ctx.d)) +
                    (k + 0.5L) * std::log(k / (k - 1.0L)) -
                    1.0L / (12.0L * (k - 1.0L)) +
                    0.5L * std::log(v * v * k /
                                    (2.0L * kPi * kE * kE *
                                     d_pow_2d1(ctx.d)));
  long double rhs = num / std::log(v * d * k);
  return static_cast<long double>(ctx.pi_dk) - rhs;
}

long double e4_rhs(int d, long double v, u64 ku) {
  long double k = static_cast<long double>(ku);
  long double D = d == 2 ? 4.0L : 3.0L;
  long double ldk = std::log(D * k);
  long double f = std::log(kE * v * d_pow_dd1(d)) -
                  D * (1.0L + std::log(v * d / D) / ldk) *
                      (1.0L + 1.2762L / ldk);
  return 0.5L * std::log(v * v * k /
                         (2.0L * kPi * kE * kE * d_pow_2d1(d))) -
         1.0L / (12.0L * (k - 1.0L)) + k * f;
}

long double check_e4(const InequalityContext& ctx) {
  return -e4_rhs(ctx.d, to_ld(ctx.v), ctx.k);
}

u64 find_k0(const mpq_class& v, int d, u64 scan_cap) {
  if (d != 2 && d != 3) throw ArgumentError("find_k0: d in {2,3}");
  int D = d == 2 ? 4 : 3;
  if (v * d < D) throw DomainError("find_k0 requires v*d >= D");
  long double vf = to_ld(v);

  auto f_of = [&](u64 k) {
    long double ldk = std::log(static_cast<long double>(D) * k);
    return std::log(kE * vf * d_pow_dd1(d)) -
           static_cast<long double>(D) *
               (1.0L + std::log(vf * d / D) / ldk) * (1.0L + 1.2762L / ldk);
  };

  // F is increasing in k for fixed v with vd >= D, so the first sign change
  // pins k1.
  u64 k1 = 0;
  for (u64 k = 2; k <= scan_cap; ++k) {
    if (f_of(k) > 0.0L) {
      k1 = k;
      break;
    }
  }
  if (k1 == 0) throw CapacityError("find_k0: F(k, v) stayed nonpositive below the scan cap");

  u64 k0 = 0;
  for (u64 k = k1; k <= scan_cap; ++k) {
    if (e4_rhs(d, vf, k) > 0.0L) {
      k0 = k;
      break;
    }
  }
  if (k0 == 0) throw CapacityError("find_k0: no sign change below the scan cap");

  // The quantity is increasing past k1; spot-check it stays positive.
  for (u64 k = k0; k <= 10 * k0; k += std::max<u64>(1, k0 / 8)) {
    if (e4_rhs(d, vf, k) <= 0.0L) {
      throw DomainError("find_k0: positivity not preserved on the sample grid");
    }
  }
  return k0;
}

bool theta_gap_criterion(u64 m, int d, u64 k, long double nu0) {
  if (d != 2 && d != 3) throw ArgumentError("theta_gap_criterion: d in {2,3}");
  if (k < 2) throw ArgumentError("theta_gap_criterion: k >= 2");
  if (nu0 <= 1.0L || nu0 > 1e10L) {
    throw DomainError("theta_gap_criterion: 1 < nu0 <= 1e10");
  }
  if (static_cast<long double>(m) < nu0) {
    throw DomainError("theta_gap_criterion requires m >= nu0");
  }
  long double theta1, theta2;
  if (d == 2) {
    theta1 = 1.00008L;
    long double lg = std::log(nu0);
    theta2 = 1.0L - 3.965L / (lg * lg);
  } else {
    long double eps = 2.0L * 1.798158L / std::sqrt(nu0);
    theta1 = 1.0L + eps;
    theta2 = 1.0L - eps;
  }
  if (theta2 <= 0.0L) throw DomainError("theta_gap_criterion: nu0 too small");
  long double lhs = static_cast<long double>(d) *
                    (static_cast<long double>(k) - 1.0L) /
                    static_cast<long double>(m);
  return lhs > theta1 / theta2 - 1.0L;
}

}  // namespace hl::smoothness
