#include <mutex>
#include <optional>

#include "clfree/groebner.hpp"
#include "groebner/engine.hpp"

namespace clfree {

struct Ideal::Cache {
  std::mutex mu;
  std::optional<std::vector<gb::Vec>> vecs[2];
  std::optional<std::vector<Polynomial>> polys[2];
};

namespace {

gb::Order ideal_order(const Ring& ring, MonomialOrder order) {
  gb::Order o;
  o.base = order;
  o.nvars = ring.arity();
  return o;
}

int slot(MonomialOrder order) { return order == MonomialOrder::Grevlex ? 0 : 1; }

}  // namespace

Ideal::Ideal(const Ring& ring, std::vector<Polynomial> generators)
    : ring_(&ring), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.ring() != ring) throw std::invalid_argument("generator from a different ring");
    if (g.is_zero()) continue;
    gens_.push_back(g.primitive());
  }
}

Ideal Ideal::unit(const Ring& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

namespace {

const std::vector<gb::Vec>& basis_vecs(const Ideal& I, MonomialOrder order, std::mutex& mu,
                                       std::optional<std::vector<gb::Vec>>& vecs) {
  std::lock_guard<std::mutex> lock(mu);
  if (!vecs) {
    gb::Order o = ideal_order(I.ring(), order);
    std::vector<gb::Vec> input;
    for (const auto& g : I.generators()) input.push_back(gb::from_polynomial(g, 0, o));
    vecs = gb::groebner(std::move(input), o);
  }
  return *vecs;
}

}  // namespace

const std::vector<Polynomial>& Ideal::basis(MonomialOrder order) const {
  int s = slot(order);
  const auto& vecs = basis_vecs(*this, order, cache_->mu, cache_->vecs[s]);
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->polys[s]) {
    std::vector<Polynomial> out;
    for (const auto& v : vecs) out.push_back(gb::to_polynomial(v, *ring_));
    cache_->polys[s] = std::move(out);
  }
  return *cache_->polys[s];
}

Polynomial Ideal::normal_form(const Polynomial& f, MonomialOrder order) const {
  if (f.ring() != *ring_) throw std::invalid_argument("normal form across rings");
  if (f.is_zero()) return f;
  const auto& vecs = basis_vecs(*this, order, cache_->mu, cache_->vecs[slot(order)]);
  gb::Order o = ideal_order(*ring_, order);
  Integer den = f.denominator_lcm();
  Rational scale;
  gb::Vec r = gb::normal_form(gb::from_polynomial(f, 0, o), vecs, o, &scale);
  Polynomial p = gb::to_polynomial(r, *ring_);
  return p * (1 / (scale * den));
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().is_constant() && !b.front().is_zero();
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

long Ideal::colength() const {
  std::vector<Monomial> leads;
  for (const auto& g : basis()) leads.push_back(g.leading_term().mono);
  if (gens_.empty()) return -1;
  HilbertData h = hilbert_from_numerator(hilbert_numerator(leads, ring_->arity()), ring_->arity());
  if (h.dimension == -1) return 0;  // unit ideal
  if (h.dimension != 0) return -1;
  return h.degree.get_si();
}

std::vector<Monomial> Ideal::standard_monomials() const {
  std::vector<Monomial> leads;
  for (const auto& g : basis()) leads.push_back(g.leading_term().mono);
  std::size_t n = ring_->arity();
  std::array<std::uint32_t, kMaxVars> bound{};
  for (std::size_t v = 0; v < n; ++v) {
    bound[v] = 0;
    for (const auto& m : leads) {
      bool pure = true;
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && m.e[w] != 0) pure = false;
      if (pure && m.e[v] > 0 && (bound[v] == 0 || m.e[v] < bound[v])) bound[v] = m.e[v];
    }
    if (bound[v] == 0 && !(leads.size() == 1 && leads[0].is_one()))
      throw std::domain_error("ideal is not zero-dimensional");
  }
  std::vector<Monomial> out;
  if (leads.size() == 1 && leads[0].is_one()) return out;
  Monomial m;
  while (true) {
    bool standard = true;
    for (const auto& l : leads)
      if (divides(l, m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(m);
    std::size_t v = 0;
    while (v < n) {
      if (++m.e[v] < bound[v]) break;
      m.e[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  std::sort(out.begin(), out.end(),
            [n](const Monomial& a, const Monomial& b) { return compare_grevlex(a, b, n) < 0; });
  return out;
}

Ideal Ideal::power(unsigned n) const {
  if (n == 0) return unit(*ring_);
  Ideal result = *this;
  for (unsigned k = 1; k < n; ++k) result = result * *this;
  return result;
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(g));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> g;
  for (const auto& p : a.generators())
    for (const auto& q : b.generators()) g.push_back(p * q);
  Ideal raw(a.ring(), std::move(g));
  // Keep generator lists short by replacing them with the reduced basis.
  if (raw.generators().size() > 24) return Ideal(a.ring(), raw.basis());
  return raw;
}

bool operator==(const Ideal& a, const Ideal& b) { return a.ring() == b.ring() && a.basis() == b.basis(); }

namespace {

// Generators of I : g.
Ideal quotient_element(const Ideal& I, const Polynomial& g) {
  const Ring& R = I.ring();
  if (I.contains(g)) return Ideal::unit(R);
  gb::Order o = ideal_order(R, MonomialOrder::Grevlex);
  std::vector<gb::Vec> input{gb::from_polynomial(g, 0, o)};
  for (const auto& f : I.generators()) input.push_back(gb::from_polynomial(f, 0, o));
  std::vector<long> tw;
  auto syz = gb::syzygies(input, 1, o, &tw);
  std::vector<Polynomial> gens;
  for (const auto& s : syz) gens.push_back(gb::to_polynomial(s, R, 0));
  return Ideal(R, std::move(gens));
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
  const Ring& R = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal(R, {});
  gb::Order o = ideal_order(R, MonomialOrder::Grevlex);
  std::vector<gb::Vec> input;
  for (const auto& f : I.generators()) input.push_back(gb::from_polynomial(f, 0, o));
  for (const auto& g : J.generators()) input.push_back(gb::from_polynomial(g, 0, o));
  auto syz = gb::syzygies(input, 1, o);
  std::vector<Polynomial> gens;
  for (const auto& s : syz) {
    Polynomial h(R);
    for (std::uint32_t i = 0; i < I.generators().size(); ++i) h += gb::to_polynomial(s, R, i) * I.generators()[i];
    gens.push_back(h);
  }
  return Ideal(R, std::move(gens));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  if (J.is_zero()) return Ideal::unit(I.ring());
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    Ideal q = quotient_element(I, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return Ideal(I.ring(), acc->basis());
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  while (true) {
    Ideal next = quotient(cur, J);
    if (cur.contains(next)) return cur;
    cur = next;
  }
}

}  // namespace clfree
