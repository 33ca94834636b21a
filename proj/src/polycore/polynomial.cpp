#include "clfree/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace clfree {

namespace {

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  return compare_grevlex(a, b, kMaxVars) > 0;
}

}  // namespace

Polynomial Polynomial::constant(const Ring& ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  if (!p.terms_.empty()) p.terms_[0].coef.canonicalize();
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t i) {
  if (i >= ring.arity()) throw std::out_of_range("variable index outside ring");
  return monomial(ring, Monomial::var(i));
}

Polynomial Polynomial::variable(const Ring& ring, std::string_view name) {
  auto i = ring.index_of(name);
  if (!i) throw std::invalid_argument("unknown variable " + std::string(name));
  return variable(ring, *i);
}

Polynomial Polynomial::monomial(const Ring& ring, const Monomial& m, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({m, c});
  if (!p.terms_.empty()) p.terms_[0].coef.canonicalize();
  return p;
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  Polynomial p(ring);
  for (auto& t : terms) t.coef.canonicalize();
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grevlex_greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms_ = std::move(out);
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.front().mono.degree();
}

int Polynomial::min_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.degree() == d; });
}

int Polynomial::degree_in(std::size_t i) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.e[i]));
  return d;
}

const Polynomial::Term& Polynomial::leading_term(MonomialOrder order) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  if (order == MonomialOrder::Grevlex) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (compare_lex(t.mono, best->mono, kMaxVars) > 0) best = &t;
  return *best;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return grevlex_greater(t.mono, key);
  });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

std::vector<Polynomial::Term> merge(const std::vector<Polynomial::Term>& a,
                                    const std::vector<Polynomial::Term>& b, bool subtract) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grevlex_greater(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grevlex_greater(b[j].mono, a[i].mono)) {
      out.push_back(b[j++]);
      if (subtract) out.back().coef = -out.back().coef;
    } else {
      Rational c = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("polynomials from different rings");
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(*this, o);
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(*this, o);
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  Polynomial r(a.ring());
  if (a.is_zero() || b.is_zero()) return r;
  if (a.size() == 1 || b.size() == 1) {
    const Polynomial& single = a.size() == 1 ? a : b;
    const Polynomial& other = a.size() == 1 ? b : a;
    const auto& t0 = single.terms_.front();
    r.terms_.reserve(other.size());
    // Multiplying by a monomial preserves the order.
    for (const auto& t : other.terms_) r.terms_.push_back({t.mono * t0.mono, t.coef * t0.coef});
    return r;
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coef * t.coef;
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Polynomial::Term& x, const Polynomial::Term& y) { return grevlex_greater(x.mono, y.mono); });
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(*ring_, 1);
  Polynomial base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(*ring_);
  for (const auto& t : terms_) {
    if (t.mono.e[var] == 0) continue;
    Monomial m = t.mono;
    Rational c = t.coef * static_cast<unsigned long>(m.e[var]);
    m.e[var] -= 1;
    r.terms_.push_back({m, c});
  }
  // Differentiation keeps grevlex order among surviving terms only up to ties;
  // re-sort to be safe.
  r.canonicalize();
  return r;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial r(*ring_);
  for (const auto& t : terms_)
    if (t.mono.degree() == d) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::substitute(const Ring& target, std::span<const Polynomial> images) const {
  if (images.size() != ring_->arity()) throw std::invalid_argument("substitution arity mismatch");
  for (const auto& im : images)
    if (!(im.ring() == target)) throw std::invalid_argument("substitution image in wrong ring");
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coef);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono.e[i]) term = term * power_of(i, t.mono.e[i]);
    for (const auto& u : term.terms_) acc[u.mono] += u.coef;
  }
  std::vector<Term> out;
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  return from_terms(target, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->arity()) throw std::invalid_argument("evaluation arity mismatch");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (std::uint32_t k = 0; k < t.mono.e[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Integer Polynomial::denominator_lcm() const {
  Integer l = 1;
  for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  return l;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Integer den = denominator_lcm();
  Integer g = 0;
  for (const auto& t : terms_) {
    Integer num = t.coef.get_num() * (den / t.coef.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(den, g);
  scale.canonicalize();
  if (terms_.front().coef < 0) scale = -scale;
  Polynomial r = *this;
  r *= scale;
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Polynomial r = *this;
  r *= Rational(1) / terms_.front().coef;
  return r;
}

namespace {

void write_monomial(std::ostream& os, const Ring& ring, const Monomial& m) {
  bool compact = ring.single_letter_names();
  bool first = true;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (m.e[i] == 0) continue;
    if (!first && !compact) os << '*';
    os << ring.var(i);
    if (m.e[i] > 1) os << '^' << m.e[i];
    first = false;
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (t.mono.is_one()) {
      os << c.get_str();
      continue;
    }
    bool integral = c.get_den() == 1;
    if (c != 1) {
      os << c.get_str();
      if (!integral || !ring_->single_letter_names()) os << '*';
    }
    write_monomial(os, *ring_, t.mono);
  }
  return os.str();
}

std::size_t Polynomial::hash() const {
  std::size_t h = std::hash<const void*>{}(ring_);
  MonomialHash mh;
  for (const auto& t : terms_) {
    h = h * 31 + mh(t.mono);
    h = h * 31 + std::hash<std::string>{}(t.coef.get_str());
  }
  return h;
}

bool try_divide(const Polynomial& a, const Polynomial& b, Polynomial& quotient) {
  check_same_ring(a, b);
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  quotient = Polynomial(a.ring());
  Polynomial rem = a;
  const auto& lead = b.leading_term();
  std::vector<Polynomial::Term> q;
  while (!rem.is_zero()) {
    const auto& t = rem.leading_term();
    if (!divides(lead.mono, t.mono)) return false;
    Polynomial step = Polynomial::monomial(a.ring(), t.mono / lead.mono, t.coef / lead.coef);
    q.push_back(step.terms().front());
    rem -= step * b;
  }
  quotient = Polynomial::from_terms(a.ring(), std::move(q));
  return true;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  Polynomial q(a.ring());
  if (!try_divide(a, b, q)) throw std::domain_error("polynomial division is not exact");
  return q;
}

Polynomial product(std::span<const Polynomial> factors, const Ring& ring) {
  Polynomial r = Polynomial::constant(ring, 1);
  for (const auto& f : factors) r *= f;
  return r;
}

}  // namespace clfree
