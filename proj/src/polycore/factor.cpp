#include "clfree/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace clfree {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate polynomials, coefficients in ascending degree order.

using QPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;
using FPoly = std::vector<std::uint64_t>;

template <class V>
void trim(V& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

template <class V>
int deg(const V& a) {
  return static_cast<int>(a.size()) - 1;
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly q_derivative(const QPoly& a) {
  QPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
  trim(r);
  return r;
}

QPoly q_monic(QPoly a) {
  trim(a);
  if (a.empty()) return a;
  Rational l = a.back();
  for (auto& c : a) c /= l;
  return a;
}

void q_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

QPoly q_div(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  q_divmod(a, b, q, r);
  if (!r.empty()) throw std::logic_error("inexact univariate division");
  return q;
}

QPoly q_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly q, r;
    q_divmod(a, b, q, r);
    a = std::move(b);
    b = q_monic(std::move(r));
  }
  return q_monic(a);
}

// Yun's squarefree decomposition of a monic polynomial.
std::vector<std::pair<QPoly, int>> yun(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  QPoly fp = q_derivative(f);
  QPoly a = q_gcd(f, fp);
  QPoly b = q_div(f, a);
  QPoly c = q_div(fp, a);
  QPoly d = q_sub(c, q_derivative(b));
  int i = 1;
  while (deg(b) > 0) {
    QPoly ai = q_gcd(b, d);
    b = q_div(b, ai);
    c = q_div(d, ai);
    d = q_sub(c, q_derivative(b));
    if (deg(ai) > 0) out.emplace_back(q_monic(ai), i);
    ++i;
  }
  return out;
}

ZPoly to_primitive_z(const QPoly& a) {
  Integer den = 1;
  for (const auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  Integer g = 0;
  for (const auto& c : a) {
    z.push_back(c.get_num() * (den / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (g != 0)
    for (auto& c : z) c /= g;
  trim(z);
  if (!z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

QPoly z_to_monic_q(const ZPoly& a) {
  QPoly q;
  for (const auto& c : a) q.emplace_back(c);
  return q_monic(q);
}

Integer z_content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly z_primitive(ZPoly a) {
  trim(a);
  Integer g = z_content(a);
  if (g != 0 && g != 1)
    for (auto& c : a) c /= g;
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Exact division over Z; returns false when b does not divide a.
bool z_divide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  ZPoly r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Integer(0));
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer c = r.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    trim(r);
  }
  trim(q);
  return r.empty();
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p < 2^32.

struct Fp {
  std::uint64_t p;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
  std::uint64_t reduce(const Integer& z) const {
    Integer m = z % Integer(static_cast<unsigned long>(p));
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
  }

  FPoly from_z(const ZPoly& a) const {
    FPoly r;
    for (const auto& c : a) r.push_back(reduce(c));
    trim(r);
    return r;
  }
  FPoly monic(FPoly a) const {
    trim(a);
    if (a.empty()) return a;
    std::uint64_t l = inv(a.back());
    for (auto& c : a) c = mul(c, l);
    return a;
  }
  FPoly sub(const FPoly& a, const FPoly& b) const {
    FPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }
  FPoly mul(const FPoly& a, const FPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
  }
  void divmod(const FPoly& a, const FPoly& b, FPoly& q, FPoly& r) const {
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    std::uint64_t li = inv(b.back());
    while (!r.empty() && r.size() >= b.size()) {
      std::size_t shift = r.size() - b.size();
      std::uint64_t c = mul(r.back(), li);
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] = sub(r[i + shift], mul(c, b[i]));
      trim(r);
    }
    trim(q);
  }
  FPoly rem(const FPoly& a, const FPoly& b) const {
    FPoly q, r;
    divmod(a, b, q, r);
    return r;
  }
  FPoly div(const FPoly& a, const FPoly& b) const {
    FPoly q, r;
    divmod(a, b, q, r);
    return q;
  }
  FPoly gcd(FPoly a, FPoly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      FPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // Extended gcd for coprime a, b: s*a + t*b = 1.
  void ext_gcd(const FPoly& a, const FPoly& b, FPoly& s, FPoly& t) const {
    FPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      FPoly q, r;
      divmod(r0, r1, q, r);
      FPoly s2 = sub(s0, mul(q, s1));
      FPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    // r0 is a nonzero constant.
    std::uint64_t ci = inv(r0.front());
    for (auto& c : s0) c = mul(c, ci);
    for (auto& c : t0) c = mul(c, ci);
    s = s0;
    t = t0;
  }
  FPoly derivative(const FPoly& a) const {
    FPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mul(a[i], i % p));
    trim(r);
    return r;
  }
  FPoly powmod(FPoly base, const Integer& e, const FPoly& m) const {
    FPoly result{1};
    base = rem(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
    }
    return result;
  }
};

// Distinct-degree then equal-degree factorization of a monic squarefree f.
std::vector<FPoly> factor_mod_p(const Fp& F, FPoly f, std::mt19937_64& rng) {
  std::vector<std::pair<FPoly, int>> ddf;
  FPoly x{0, 1};
  FPoly h = x;
  int d = 1;
  while (deg(f) >= 2 * d) {
    h = F.powmod(h, Integer(static_cast<unsigned long>(F.p)), f);
    FPoly g = F.gcd(F.sub(h, x), f);
    if (deg(g) > 0) {
      ddf.emplace_back(g, d);
      f = F.div(f, g);
      h = F.rem(h, f);
    }
    ++d;
  }
  if (deg(f) > 0) ddf.emplace_back(f, deg(f));

  std::vector<FPoly> out;
  for (auto& [g, dd] : ddf) {
    std::vector<FPoly> stack{g};
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(dd));
    e = (e - 1) / 2;
    while (!stack.empty()) {
      FPoly u = std::move(stack.back());
      stack.pop_back();
      if (deg(u) == dd) {
        out.push_back(F.monic(u));
        continue;
      }
      while (true) {
        FPoly a(static_cast<std::size_t>(deg(u)));
        for (auto& c : a) c = rng() % F.p;
        trim(a);
        if (deg(a) < 1) continue;
        FPoly b = F.powmod(a, e, u);
        b = F.sub(b, FPoly{1});
        FPoly g2 = F.gcd(b, u);
        if (deg(g2) > 0 && deg(g2) < deg(u)) {
          stack.push_back(g2);
          stack.push_back(F.div(u, g2));
          break;
        }
      }
    }
  }
  return out;
}

// Coefficients reduced into (-m/2, m/2].
ZPoly symmetric_mod(const ZPoly& a, const Integer& m) {
  ZPoly r;
  Integer half = m / 2;
  for (const auto& c : a) {
    Integer v = c % m;
    if (v < 0) v += m;
    if (v > half) v -= m;
    r.push_back(v);
  }
  trim(r);
  return r;
}

ZPoly mod_reduce(const ZPoly& a, const Integer& m) {
  ZPoly r;
  for (const auto& c : a) {
    Integer v = c % m;
    if (v < 0) v += m;
    r.push_back(v);
  }
  trim(r);
  return r;
}

ZPoly lift_z(const FPoly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// Lifts target = g*h (mod p), g and h monic and coprime mod p, to a
// factorization modulo p^k. Linear Hensel lifting.
void hensel_pair(const Fp& F, const ZPoly& target, unsigned k, ZPoly& g, ZPoly& h) {
  FPoly gp = F.from_z(g), hp = F.from_z(h), s, t;
  F.ext_gcd(gp, hp, s, t);
  Integer pj = static_cast<unsigned long>(F.p);
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), F.p, k);
  for (unsigned j = 1; j < k; ++j) {
    Integer next = pj * static_cast<unsigned long>(F.p);
    ZPoly diff = target;
    ZPoly gh = z_mul(g, h);
    diff.resize(std::max(diff.size(), gh.size()), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    diff = mod_reduce(diff, next);
    ZPoly e;
    for (const auto& c : diff) e.push_back(c / pj);
    trim(e);
    FPoly ep = F.from_z(e);
    FPoly sigma = F.rem(F.mul(s, ep), hp);
    FPoly tau = F.rem(F.mul(t, ep), gp);
    ZPoly sz = lift_z(sigma), tz = lift_z(tau);
    g.resize(std::max(g.size(), tz.size()), Integer(0));
    h.resize(std::max(h.size(), sz.size()), Integer(0));
    for (std::size_t i = 0; i < tz.size(); ++i) g[i] += pj * tz[i];
    for (std::size_t i = 0; i < sz.size(); ++i) h[i] += pj * sz[i];
    g = mod_reduce(g, next);
    h = mod_reduce(h, next);
    pj = next;
  }
  (void)pk;
}

ZPoly fprod(const Fp& F, const std::vector<FPoly>& fs, std::size_t lo, std::size_t hi) {
  FPoly r{1};
  for (std::size_t i = lo; i < hi; ++i) r = F.mul(r, fs[i]);
  return lift_z(r);
}

// Lifts the monic factorization of target (monic mod p^k) into lifted.
void hensel_all(const Fp& F, const ZPoly& target, unsigned k, const std::vector<FPoly>& fs, std::size_t lo,
                std::size_t hi, std::vector<ZPoly>& lifted) {
  if (hi - lo == 1) {
    lifted.push_back(target);
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  ZPoly g = fprod(F, fs, lo, mid), h = fprod(F, fs, mid, hi);
  hensel_pair(F, target, k, g, h);
  hensel_all(F, g, k, fs, lo, mid, lifted);
  hensel_all(F, h, k, fs, mid, hi, lifted);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Zassenhaus factorization of a squarefree primitive f with positive leading
// coefficient. Returns primitive irreducible factors.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  if (deg(f) <= 1) return {f};
  std::mt19937_64 rng(0x5eed);

  // Choose the prime giving the fewest modular factors among a few candidates.
  std::vector<FPoly> best_factors;
  std::uint64_t best_p = 0;
  int tried = 0;
  for (std::uint64_t p = 5; tried < 6 && p < 100000; ++p) {
    if (!is_prime(p)) continue;
    Fp F{p};
    if (F.reduce(f.back()) == 0) continue;
    FPoly fp = F.from_z(f);
    if (deg(F.gcd(fp, F.derivative(fp))) > 0) continue;
    ++tried;
    auto fac = factor_mod_p(F, F.monic(fp), rng);
    if (best_p == 0 || fac.size() < best_factors.size()) {
      best_factors = std::move(fac);
      best_p = p;
    }
    if (best_factors.size() == 1) break;
  }
  if (best_p == 0) throw std::logic_error("no suitable prime for factorization");
  if (best_factors.size() == 1) return {f};
  std::sort(best_factors.begin(), best_factors.end());

  Fp F{best_p};
  // Coefficient bound: |lc| * 2^n * ||f||_2, doubled for the symmetric range.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = abs(f.back()) * norm * 2;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(deg(f)));
  unsigned k = 1;
  Integer pk = static_cast<unsigned long>(best_p);
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(best_p);
    ++k;
  }

  // Monic version of f modulo p^k.
  Integer lc_inv;
  Integer lc_mod = f.back() % pk;
  if (lc_mod < 0) lc_mod += pk;
  mpz_invert(lc_inv.get_mpz_t(), lc_mod.get_mpz_t(), pk.get_mpz_t());
  ZPoly target;
  for (const auto& c : f) target.push_back(c * lc_inv);
  target = mod_reduce(target, pk);

  std::vector<ZPoly> lifted;
  hensel_all(F, target, k, best_factors, 0, best_factors.size(), lifted);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<ZPoly> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly cand{rest.back()};
      for (auto i : idx) cand = mod_reduce(z_mul(cand, pool[i]), pk);
      cand = z_primitive(symmetric_mod(cand, pk));
      ZPoly q;
      if (z_divide(rest, cand, q)) {
        result.push_back(cand);
        rest = z_primitive(q);
        std::vector<ZPoly> remaining;
        for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
          if (j < s && idx[j] == i) {
            ++j;
            continue;
          }
          remaining.push_back(pool[i]);
        }
        pool = std::move(remaining);
        found = true;
        break;
      }
      // Next combination.
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == pool.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (deg(rest) > 0) result.push_back(rest);
  return result;
}

// Index of the only variable occurring in p (0 when p is constant).
std::size_t sole_variable(const Polynomial& p) {
  std::size_t var = 0;
  bool seen = false;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < p.ring().arity(); ++i) {
      if (t.mono.e[i] == 0) continue;
      if (seen && var != i) throw std::invalid_argument("polynomial is not univariate: " + p.to_string());
      var = i;
      seen = true;
    }
  }
  return var;
}

QPoly to_dense(const Polynomial& p, std::size_t var) {
  QPoly a(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1, Rational(0));
  for (const auto& t : p.terms()) a[t.mono.e[var]] = t.coef;
  trim(a);
  return a;
}

Polynomial from_dense(const QPoly& a, const Ring& ring, std::size_t var) {
  std::vector<Polynomial::Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) terms.push_back({Monomial::var(var, static_cast<std::uint32_t>(i)), a[i]});
  return Polynomial::from_terms(ring, std::move(terms));
}

void sort_factors(std::vector<Factor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.to_string() < b.factor.to_string();
  });
}

}  // namespace

Polynomial Factorization::expand(const Ring& ring) const {
  Polynomial r = Polynomial::constant(ring, unit);
  for (const auto& f : factors) r *= f.factor.pow(static_cast<unsigned>(f.multiplicity));
  return r;
}

std::vector<Factor> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
  std::size_t var = sole_variable(p);
  std::vector<Factor> out;
  for (auto& [a, m] : yun(q_monic(to_dense(p, var)))) out.push_back({from_dense(a, p.ring(), var), m});
  return out;
}

Factorization factor_univariate(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  std::size_t var = sole_variable(p);
  QPoly dense = to_dense(p, var);
  Factorization result{dense.back(), {}};
  for (auto& [a, m] : yun(q_monic(dense))) {
    for (const auto& z : zassenhaus(to_primitive_z(a)))
      result.factors.push_back({from_dense(z_to_monic_q(z), p.ring(), var), m});
  }
  sort_factors(result.factors);
  return result;
}

Factorization factor_binary_form(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("cannot factor the zero form");
  if (f.ring().arity() != 2 || !f.is_homogeneous())
    throw std::invalid_argument("expected a homogeneous binary form: " + f.to_string());
  const Ring& R = f.ring();
  int t_power = f.degree();
  for (const auto& term : f.terms()) t_power = std::min(t_power, static_cast<int>(term.mono.e[1]));
  // f(s, 1) after removing t^t_power.
  QPoly dense(static_cast<std::size_t>(f.degree()) + 1, Rational(0));
  for (const auto& term : f.terms()) dense[term.mono.e[0]] = term.coef;
  trim(dense);
  Factorization result{dense.back(), {}};
  if (t_power > 0) result.factors.push_back({Polynomial::variable(R, 1), t_power});
  if (deg(dense) > 0) {
    for (auto& [a, m] : yun(q_monic(dense))) {
      for (const auto& z : zassenhaus(to_primitive_z(a))) {
        QPoly q = z_to_monic_q(z);
        int e = deg(q);
        std::vector<Polynomial::Term> terms;
        for (int i = 0; i <= e; ++i) {
          if (q[static_cast<std::size_t>(i)] == 0) continue;
          Monomial mono;
          mono.e[0] = static_cast<std::uint32_t>(i);
          mono.e[1] = static_cast<std::uint32_t>(e - i);
          terms.push_back({mono, q[static_cast<std::size_t>(i)]});
        }
        result.factors.push_back({Polynomial::from_terms(R, std::move(terms)), m});
      }
    }
  }
  sort_factors(result.factors);
  return result;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.ring().arity() == 2 && p.is_homogeneous() && !p.is_constant()) {
    Polynomial r = Polynomial::constant(p.ring(), 1);
    for (const auto& f : factor_binary_form(p).factors) r *= f.factor;
    return r.primitive();
  }
  Polynomial r = Polynomial::constant(p.ring(), 1);
  for (const auto& f : squarefree_decomposition(p)) r *= f.factor;
  return r;
}

int distinct_root_count(const Polynomial& binary_form) {
  int k = 0;
  for (const auto& f : factor_binary_form(binary_form).factors) k += f.factor.degree();
  return k;
}

}  // namespace clfree
