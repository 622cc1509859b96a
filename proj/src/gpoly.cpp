#include "hl/gpoly.hpp"

#include <algorithm>
#include <numeric>

#include "hl/error.hpp"

namespace hl::gpoly {

GPolySpec::GPolySpec(u64 n_, u64 u_, int alpha_, int d_,
                     std::vector<mpz_class> a_)
    : n(n_), u(u_), alpha(alpha_), d(d_), a(std::move(a_)) {
  if (n < 1) throw ArgumentError("gpoly: degree n >= 1");
  if (d != 2 && d != 3) throw ArgumentError("gpoly: d in {2,3}");
  if (alpha < 1 || alpha >= d) throw ArgumentError("gpoly: 1 <= alpha < d");
  if (a.size() != n + 1) throw ArgumentError("gpoly: need a_0..a_n");
  if (a[0] == 0 || a[n] == 0) throw ArgumentError("gpoly: a_0 * a_n != 0");
}

GPolySpec GPolySpec::with_unit_coeffs(u64 n, u64 u, int alpha, int d,
                                      mpz_class a0, mpz_class an) {
  std::vector<mpz_class> a(n + 1, 1);
  a[0] = std::move(a0);
  a[n] = std::move(an);
  return GPolySpec(n, u, alpha, d, std::move(a));
}

std::vector<mpz_class> build_coefficients(const GPolySpec& spec) {
  std::vector<mpz_class> c(spec.n + 1);
  c[spec.n] = spec.a[spec.n];
  mpz_class tail = 1;  // prod_{i=j}^{n-1} (alpha + (i+u)d), built downward
  for (u64 j = spec.n; j-- > 0;) {
    tail *= mpz_class(spec.alpha) +
            mpz_class(static_cast<unsigned long>(j + spec.u)) * spec.d;
    c[j] = spec.a[j] * tail;
  }
  return c;
}

namespace {

// Dense polynomials over F_p, lowest degree first, no trailing zeros.
using Poly = std::vector<u64>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly mul(const Poly& f, const Poly& g, u64 p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      h[i + j] = (h[i + j] + f[i] * g[j]) % p;
    }
  }
  trim(h);
  return h;
}

// remainder of f mod g, g monic-izable
Poly rem(Poly f, const Poly& g, u64 p) {
  trim(f);
  u64 lead_inv = powmod(g.back(), p - 2, p);
  while (f.size() >= g.size()) {
    u64 c = f.back() * lead_inv % p;
    std::size_t shift = f.size() - g.size();
    if (c != 0) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        u64 sub = c * g[i] % p;
        std::size_t k = i + shift;
        f[k] = (f[k] + p - sub) % p;
      }
    }
    f.pop_back();
    trim(f);
    if (f.empty()) break;
  }
  return f;
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = powmod(a.back(), p - 2, p);
    for (u64& c : a) c = c * inv % p;
  }
  return a;
}

Poly derivative(const Poly& f, u64 p) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * (i % p) % p);
  trim(d);
  return d;
}

// x^(p) mod f via square and multiply on exponent bits
Poly pow_x_p(const Poly& f, u64 p, u64 e) {
  Poly base = rem(Poly{0, 1}, f, p);
  Poly acc{1};
  while (e) {
    if (e & 1) acc = rem(mul(acc, base, p), f, p);
    base = rem(mul(base, base, p), f, p);
    e >>= 1;
  }
  return acc;
}

Poly make_monic(Poly f, u64 p) {
  trim(f);
  if (f.empty()) return f;
  u64 inv = powmod(f.back(), p - 2, p);
  for (u64& c : f) c = c * inv % p;
  return f;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

Poly quot(Poly f, const Poly& g, u64 p) {
  trim(f);
  u64 lead_inv = powmod(g.back(), p - 2, p);
  if (f.size() < g.size()) return {};
  Poly q(f.size() - g.size() + 1, 0);
  while (f.size() >= g.size()) {
    u64 c = f.back() * lead_inv % p;
    std::size_t shift = f.size() - g.size();
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) {
      u64 s = c * g[i] % p;
      f[i + shift] = (f[i + shift] + p - s) % p;
    }
    trim(f);
    if (f.empty()) break;
  }
  return q;
}

Poly reduce_mod_p(const std::vector<mpz_class>& coeffs, u64 p) {
  Poly f(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    mpz_class r = coeffs[i] % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    f[i] = mpz_get_ui(r.get_mpz_t());
  }
  trim(f);
  return f;
}

}  // namespace

std::vector<std::pair<u64, std::vector<u64>>> ddf_components(
    const std::vector<mpz_class>& coeffs, u64 p) {
  if (!is_prime_u64(p)) throw ArgumentError("ddf: p must be prime");
  Poly f = make_monic(reduce_mod_p(coeffs, p), p);
  if (f.size() < 2) throw ArgumentError("ddf: reduction is constant");

  std::vector<std::pair<u64, std::vector<u64>>> parts;
  Poly rest = f;
  Poly h = rem(Poly{0, 1}, rest, p);  // x mod rest
  u64 d = 0;
  while (rest.size() > 1 && 2 * (d + 1) <= rest.size() - 1) {
    ++d;
    // h <- h^p mod rest
    Poly acc{1};
    Poly base = h;
    u64 e = p;
    while (e) {
      if (e & 1) acc = rem(mul(acc, base, p), rest, p);
      base = rem(mul(base, base, p), rest, p);
      e >>= 1;
    }
    h = acc;
    Poly g = gcd(sub(h, Poly{0, 1}, p), rest, p);
    if (g.size() > 1) {
      parts.emplace_back(d, g);
      rest = quot(rest, g, p);
      rest = make_monic(rest, p);
      h = rem(h, rest, p);
    }
  }
  if (rest.size() > 1) {
    parts.emplace_back(rest.size() - 1, rest);
  }
  return parts;
}

DegreeCertificate degree_multiset_mod_p(const std::vector<mpz_class>& coeffs,
                                        u64 p) {
  if (!is_prime_u64(p) || p > 10'000) {
    throw ArgumentError("degree_multiset_mod_p: p prime, p <= 1e4");
  }
  DegreeCertificate cert{p, {}, false};
  const mpz_class& lead = coeffs.back();
  if (mpz_divisible_ui_p(lead.get_mpz_t(), p)) return cert;

  Poly f = make_monic(reduce_mod_p(coeffs, p), p);
  Poly df = derivative(f, p);
  if (df.empty() || gcd(f, df, p).size() != 1) return cert;  // not squarefree

  cert.usable = true;
  for (const auto& [d, g] : ddf_components(coeffs, p)) {
    u64 count = (g.size() - 1) / d;
    for (u64 i = 0; i < count; ++i) cert.degrees.push_back(d);
  }
  std::sort(cert.degrees.begin(), cert.degrees.end());
  return cert;
}

DegreeAbsence no_factor_of_degree(const std::vector<mpz_class>& coeffs, u64 k,
                                  unsigned prime_budget) {
  const u64 n = coeffs.size() - 1;
  if (k < 1 || k >= n) throw ArgumentError("no_factor_of_degree: 1 <= k < n");

  unsigned usable_seen = 0;
  for (u64 p = 3; p <= 10'000 && usable_seen < prime_budget; p += 2) {
    if (!is_prime_u64(p)) continue;
    if (mpz_divisible_ui_p(coeffs.back().get_mpz_t(), p)) continue;
    DegreeCertificate cert = degree_multiset_mod_p(coeffs, p);
    if (!cert.usable) continue;
    ++usable_seen;
    // subset-sum over the degree multiset
    std::vector<char> reach(k + 1, 0);
    reach[0] = 1;
    for (u64 d : cert.degrees) {
      for (u64 s = k; s >= d; --s) {
        if (reach[s - d]) reach[s] = 1;
      }
    }
    if (!reach[k]) return DegreeAbsence::certified_absent;
  }
  return DegreeAbsence::inconclusive;
}

std::vector<mpq_class> rational_linear_factors(
    const std::vector<mpz_class>& coeffs) {
  const u64 n = coeffs.size() - 1;
  if (n > 30) throw CapacityError("rational root search limited to n <= 30");
  if (coeffs.back() == 0) throw ArgumentError("leading coefficient is zero");

  std::vector<mpq_class> roots;
  std::size_t low = 0;
  while (low < coeffs.size() && coeffs[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  std::vector<mpz_class> c(coeffs.begin() + low, coeffs.end());

  auto divisors = [](const mpz_class& value) {
    mpz_class v = abs(value);
    std::vector<mpz_class> divs{1};
    mpz_class f = 2;
    mpz_class rest = v;
    while (f * f <= rest) {
      if (mpz_divisible_p(rest.get_mpz_t(), f.get_mpz_t())) {
        int e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), f.get_mpz_t())) {
          rest /= f;
          ++e;
        }
        std::size_t base = divs.size();
        mpz_class pw = 1;
        for (int i = 1; i <= e; ++i) {
          pw *= f;
          for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
        }
        if (divs.size() > 2'000'000) {
          throw CapacityError("divisor enumeration too large");
        }
      }
      f += 1;
    }
    if (rest > 1) {
      std::size_t base = divs.size();
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * rest);
    }
    return divs;
  };

  auto eval = [&c](const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = acc * x + mpq_class(c[i]);
    }
    return acc;
  };

  std::vector<mpz_class> s_divs = divisors(c.front());
  std::vector<mpz_class> t_divs = divisors(c.back());
  for (const mpz_class& s : s_divs) {
    for (const mpz_class& t : t_divs) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        mpq_class r(sign * s, t);
        r.canonicalize();
        if (eval(r) == 0) roots.push_back(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace hl::gpoly
