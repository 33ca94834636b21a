#include <algorithm>

#include "clfree/factor.hpp"
#include "clfree/groebner.hpp"
#include "clfree/linalg.hpp"

namespace clfree {

namespace {

// Coordinates of a normal form in the basis of standard monomials.
std::vector<Rational> coordinates(const Polynomial& nf, const std::vector<Monomial>& standard) {
  std::vector<Rational> v(standard.size());
  for (const auto& t : nf.terms()) {
    auto it = std::find(standard.begin(), standard.end(), t.mono);
    if (it == standard.end()) throw std::logic_error("normal form outside the standard monomials");
    v[static_cast<std::size_t>(it - standard.begin())] = t.coef;
  }
  return v;
}

Polynomial univariate(const Ring& target, const std::vector<Rational>& coeffs) {
  std::vector<Polynomial::Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) terms.push_back({Monomial::var(0, static_cast<std::uint32_t>(i)), coeffs[i]});
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial evaluate_at(const Polynomial& m, const Polynomial& u) {
  std::vector<Polynomial> images{u};
  return m.substitute(u.ring(), images);
}

}  // namespace

Polynomial minimal_polynomial(const Ideal& I, const Polynomial& u, const Ring& target) {
  if (target.arity() != 1) throw std::invalid_argument("minimal polynomial needs a one-variable ring");
  std::vector<Monomial> standard = I.standard_monomials();
  if (standard.empty()) return Polynomial::constant(target, 1);
  // Reduce u^k against the earlier powers, keeping for each reduced vector
  // the combination of powers it came from. The first vector that reduces to
  // zero gives the minimal polynomial. Fraction free, with content removed.
  struct Reduced {
    std::size_t pivot;
    std::vector<Integer> vec;
    std::vector<Integer> combo;
  };
  std::vector<Reduced> rows;
  Polynomial power = Polynomial::constant(I.ring(), 1);
  for (std::size_t k = 0; k <= standard.size(); ++k) {
    std::vector<Rational> coords = coordinates(power, standard);
    Integer den = 1;
    for (const auto& c : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> v(coords.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coords[i].get_num() * (den / coords[i].get_den());
    std::vector<Integer> combo(k + 1);
    combo[k] = den;
    for (const auto& r : rows) {
      if (v[r.pivot] == 0) continue;
      Integer g;
      mpz_gcd(g.get_mpz_t(), v[r.pivot].get_mpz_t(), r.vec[r.pivot].get_mpz_t());
      Integer a = r.vec[r.pivot] / g, b = v[r.pivot] / g;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (a != 1) v[i] *= a;
        if (r.vec[i] != 0) v[i] -= b * r.vec[i];
      }
      for (std::size_t i = 0; i < combo.size(); ++i) {
        if (a != 1) combo[i] *= a;
        if (i < r.combo.size() && r.combo[i] != 0) combo[i] -= b * r.combo[i];
      }
      Integer content = 0;
      for (const auto& c : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
      for (const auto& c : combo) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
      if (content > 1) {
        for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
        for (auto& c : combo) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
      }
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const Integer& c) { return c != 0; });
    if (nz == v.end()) {
      std::vector<Rational> coeffs(combo.size());
      for (std::size_t i = 0; i < combo.size(); ++i) {
        coeffs[i] = Rational(combo[i], combo.back());
        coeffs[i].canonicalize();
      }
      return univariate(target, coeffs);
    }
    rows.push_back({static_cast<std::size_t>(nz - v.begin()), std::move(v), std::move(combo)});
    power = I.normal_form(power * u);
  }
  throw std::logic_error("minimal polynomial degree exceeds the colength");
}

Ideal radical_zero_dim(const Ideal& I) {
  const Ring& R = I.ring();
  const Ring& T = Ring::get({"T"});
  std::vector<Polynomial> gens = I.generators();
  bool changed = false;
  for (std::size_t v = 0; v < R.arity(); ++v) {
    Polynomial m = minimal_polynomial(I, Polynomial::variable(R, v), T);
    if (m.degree() <= 1) continue;
    Polynomial sq = squarefree_part(m);
    if (sq.degree() == m.degree()) continue;
    gens.push_back(evaluate_at(sq, Polynomial::variable(R, v)));
    changed = true;
  }
  if (!changed) return I;
  return Ideal(R, std::move(gens));
}

std::vector<Ideal> prime_decomposition_zero_dim(const Ideal& I) {
  const Ring& R = I.ring();
  const Ring& T = Ring::get({"T"});
  if (I.is_unit()) return {};
  Ideal rad = radical_zero_dim(I);
  long d = rad.colength();
  if (d < 0) throw std::domain_error("ideal is not zero-dimensional");
  // Separating element u = x_0 + c x_1 + c^2 x_2 + ...
  static const long kTrials[] = {0, 1, -1, 2, -2, 3, -3, 5, 7, 11, 13, 17, 19, 23};
  for (long c : kTrials) {
    Polynomial u(R);
    Rational w = 1;
    for (std::size_t v = 0; v < R.arity(); ++v) {
      u += w * Polynomial::variable(R, v);
      w *= c;
    }
    Polynomial m = minimal_polynomial(rad, u, T);
    if (m.degree() != d) continue;
    std::vector<Ideal> primes;
    for (const auto& f : factor_univariate(m).factors) {
      std::vector<Polynomial> gens = rad.generators();
      gens.push_back(evaluate_at(f.factor, u));
      Ideal p(R, std::move(gens));
      primes.emplace_back(R, p.basis());
    }
    return primes;
  }
  throw std::logic_error("no separating linear form found");
}

}  // namespace clfree
