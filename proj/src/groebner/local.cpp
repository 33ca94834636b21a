#include <algorithm>
#include <map>
#include <optional>

#include "clfree/factor.hpp"
#include "clfree/groebner.hpp"
#include "clfree/linalg.hpp"

namespace clfree {

namespace {

// Q[u]/(m) with m monic of degree d; elements are coefficient vectors of length d.
class Field {
public:
  using Elem = std::vector<Rational>;

  explicit Field(std::vector<Rational> modulus) : m_(std::move(modulus)), d_(m_.size() - 1) {}

  std::size_t degree() const { return d_; }
  Elem zero() const { return Elem(d_); }
  Elem scalar(const Rational& c) const {
    Elem e(d_);
    e[0] = c;
    return e;
  }
  static bool is_zero(const Elem& a) {
    for (const auto& c : a)
      if (c != 0) return false;
    return true;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    if (d_ == 1) return {a[0] * b[0]};
    std::vector<Rational> r(2 * d_ - 1);
    for (std::size_t i = 0; i < d_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < d_; ++j) r[i + j] += a[i] * b[j];
    }
    for (std::size_t k = r.size(); k-- > d_;) {
      if (r[k] == 0) continue;
      Rational c = r[k];
      for (std::size_t i = 0; i <= d_; ++i) r[k - d_ + i] -= c * m_[i];
    }
    r.resize(d_);
    return r;
  }

  // a -= c * b
  void sub_mul(Elem& a, const Elem& c, const Elem& b) const {
    Elem p = mul(c, b);
    for (std::size_t i = 0; i < d_; ++i) a[i] -= p[i];
  }

  Elem inv(const Elem& a) const {
    if (d_ == 1) return {1 / a[0]};
    // Extended Euclid on (m, a) in Q[u].
    using P = std::vector<Rational>;
    auto trim = [](P& p) {
      while (!p.empty() && p.back() == 0) p.pop_back();
    };
    P r0 = m_, r1 = a, s0{}, s1{Rational(1)};
    trim(r1);
    while (r1.size() > 1) {
      // r0 = q r1 + r
      P q(r0.size() - r1.size() + 1), r = r0;
      for (std::size_t k = q.size(); k-- > 0;) {
        Rational c = r[k + r1.size() - 1] / r1.back();
        q[k] = c;
        for (std::size_t i = 0; i < r1.size(); ++i) r[k + i] -= c * r1[i];
      }
      r.resize(r1.size() - 1);
      trim(r);
      P s(std::max(s0.size(), q.size() + s1.size() - 1));
      for (std::size_t i = 0; i < s0.size(); ++i) s[i] += s0[i];
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < s1.size(); ++j) s[i + j] -= q[i] * s1[j];
      trim(s);
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r1.empty()) throw std::domain_error("zero divisor in residue field");
    Elem out(d_);
    for (std::size_t i = 0; i < s1.size() && i < d_; ++i) out[i] = s1[i] / r1[0];
    return out;
  }

private:
  std::vector<Rational> m_;
  std::size_t d_;
};

struct Point {
  Field field;
  std::vector<Field::Elem> coords;
};

std::vector<Rational> dense(const Polynomial& p) {
  std::vector<Rational> c(static_cast<std::size_t>(p.degree()) + 1);
  for (const auto& t : p.terms()) c[t.mono.e[0]] = t.coef;
  return c;
}

// Coordinates of a normal form in the basis of standard monomials.
std::vector<Rational> coordinates(const Polynomial& nf, const std::vector<Monomial>& standard) {
  std::vector<Rational> v(standard.size());
  for (const auto& t : nf.terms())
    for (std::size_t k = 0; k < standard.size(); ++k)
      if (standard[k] == t.mono) v[k] = t.coef;
  return v;
}

}  // namespace

// The residue field is presented through a primitive element
// u = x_0 + c x_1 + c^2 x_2 + ...
ResiduePoint residue_point(const Ideal& P) {
  const Ring& R = P.ring();
  const Ring& T = Ring::get({"T"});
  long d = P.colength();
  if (d <= 0) throw std::invalid_argument("cluster ideal is not a zero-dimensional prime");
  if (d == 1) {
    std::vector<std::vector<Rational>> coords;
    for (std::size_t v = 0; v < R.arity(); ++v) {
      Polynomial nf = P.normal_form(Polynomial::variable(R, v));
      coords.push_back({nf.is_zero() ? Rational(0) : nf.terms().front().coef});
    }
    return {{Rational(0), Rational(1)}, std::move(coords)};
  }
  static const long kTrials[] = {0, 1, -1, 2, -2, 3, -3, 5, 7, 11, 13, 17, 19, 23};
  std::vector<Monomial> standard = P.standard_monomials();
  for (long c : kTrials) {
    Polynomial u(R);
    Rational w = 1;
    for (std::size_t v = 0; v < R.arity(); ++v) {
      u += w * Polynomial::variable(R, v);
      w *= c;
    }
    Polynomial mp = minimal_polynomial(P, u, T);
    if (mp.degree() != d) continue;
    // Columns: normal forms of 1, u, ..., u^(d-1), then the target variable.
    std::vector<std::vector<Rational>> powers;
    Polynomial pw = Polynomial::constant(R, 1);
    for (long k = 0; k < d; ++k) {
      powers.push_back(coordinates(pw, standard));
      pw = P.normal_form(pw * u);
    }
    std::size_t n = standard.size();
    std::vector<std::vector<Rational>> coords;
    for (std::size_t v = 0; v < R.arity(); ++v) {
      auto target = coordinates(P.normal_form(Polynomial::variable(R, v)), standard);
      Matrix m(n, static_cast<std::size_t>(d) + 1);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < static_cast<std::size_t>(d); ++k) m(r, k) = powers[k][r];
        m(r, static_cast<std::size_t>(d)) = target[r];
      }
      auto ker = m.kernel();
      if (ker.size() != 1 || ker[0].back() == 0) throw std::logic_error("primitive element does not generate");
      std::vector<Rational> e(static_cast<std::size_t>(d));
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = -ker[0][k] / ker[0].back();
      coords.push_back(std::move(e));
    }
    return {dense(mp), std::move(coords)};
  }
  throw std::logic_error("no primitive element found");
}

namespace {

bool mono_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.e > b.e;
}

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_less(a, b); }
};

using KPoly = std::map<Monomial, Field::Elem, MonoLess>;

// g(x + a) truncated below degree n.
KPoly translate(const Polynomial& g, const Point& pt, int n) {
  const Field& K = pt.field;
  std::size_t k = g.ring().arity();
  KPoly out;
  for (const auto& t : g.terms()) {
    // Expand prod_i (x_i + a_i)^{e_i} one variable at a time.
    KPoly acc{{Monomial{}, K.scalar(t.coef)}};
    for (std::size_t v = 0; v < k; ++v) {
      std::uint32_t e = t.mono.e[v];
      if (e == 0) continue;
      std::vector<Field::Elem> apow{K.scalar(1)};
      for (std::uint32_t j = 1; j <= e; ++j) apow.push_back(K.mul(apow.back(), pt.coords[v]));
      KPoly next;
      Integer binom = 1;
      for (std::uint32_t j = 0; j <= e; ++j) {
        // term binom(e, j) x_v^j a_v^(e-j)
        Field::Elem c = apow[e - j];
        for (auto& x : c) x *= binom;
        if (!Field::is_zero(c))
          for (const auto& [m, a] : acc) {
            Monomial mm = m * Monomial::var(v, j);
            if (mm.degree() >= n) continue;
            Field::Elem prod = K.mul(a, c);
            auto it = next.find(mm);
            if (it == next.end())
              next.emplace(mm, std::move(prod));
            else
              for (std::size_t i = 0; i < prod.size(); ++i) it->second[i] += prod[i];
          }
        binom = binom * (e - j) / (j + 1);
      }
      acc = std::move(next);
    }
    for (auto& [m, a] : acc) {
      auto it = out.find(m);
      if (it == out.end())
        out.emplace(m, std::move(a));
      else
        for (std::size_t i = 0; i < a.size(); ++i) it->second[i] += a[i];
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = Field::is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

void monomials_below(std::size_t k, int n, std::vector<Monomial>& out) {
  Monomial m;
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v == k) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.e[v] = static_cast<std::uint32_t>(e);
      self(self, v + 1, left - e);
    }
    m.e[v] = 0;
  };
  rec(rec, 0, n - 1);
  std::sort(out.begin(), out.end(), mono_less);
}

// dim_K K[x]/(I + m^n) at the point, by echelon form of truncated multiples.
long truncated_colength(const std::vector<KPoly>& gens, const Field& K, std::size_t arity, int n) {
  std::vector<Monomial> cols;
  monomials_below(arity, n, cols);
  std::map<Monomial, std::size_t, MonoLess> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  using Row = std::vector<std::pair<std::size_t, Field::Elem>>;  // sorted by column
  std::vector<std::optional<Row>> pivots(cols.size());
  std::size_t rank = 0;
  Row scratch;
  for (const auto& g : gens) {
    if (g.empty()) continue;
    int order = g.begin()->first.degree();
    for (const auto& t : cols) {
      if (t.degree() + order >= n) break;
      Row row;
      for (const auto& [m, c] : g) {
        Monomial mm = m * t;
        if (mm.degree() >= n) break;
        row.emplace_back(index.at(mm), c);
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      while (!row.empty()) {
        std::size_t lead = row.front().first;
        if (!pivots[lead]) {
          Field::Elem s = K.inv(row.front().second);
          for (auto& [col, c] : row) c = K.mul(c, s);
          pivots[lead] = std::move(row);
          ++rank;
          break;
        }
        // row -= row.lead * pivot
        const Row& p = *pivots[lead];
        Field::Elem f = row.front().second;
        scratch.clear();
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < p.size()) {
          if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
            scratch.push_back(std::move(row[i++]));
          } else if (i == row.size() || p[j].first < row[i].first) {
            Field::Elem c = K.zero();
            K.sub_mul(c, f, p[j].second);
            scratch.emplace_back(p[j].first, std::move(c));
            ++j;
          } else {
            Field::Elem c = std::move(row[i].second);
            K.sub_mul(c, f, p[j].second);
            if (!Field::is_zero(c)) scratch.emplace_back(row[i].first, std::move(c));
            ++i;
            ++j;
          }
        }
        row.swap(scratch);
      }
    }
  }
  return static_cast<long>(cols.size() - rank);
}

}  // namespace

long local_multiplicity(const Ideal& I, const ResiduePoint& p, unsigned n_max) {
  Point pt{Field(p.modulus), p.coords};
  const long d = static_cast<long>(pt.field.degree());
  // Over the residue field the cluster splits into d conjugate points with
  // equal local colength, so colength(I + P^n) = d * colength at one point.
  // Equal values at n and n+1 force m^n into I + m^(n+1), so m^n lies in I
  // locally by Nakayama and the value is final.
  long previous = -1;
  for (unsigned n = 1; n <= n_max; ++n) {
    std::vector<KPoly> gens;
    for (const auto& g : I.generators()) gens.push_back(translate(g, pt, static_cast<int>(n)));
    long c = d * truncated_colength(gens, pt.field, I.ring().arity(), static_cast<int>(n));
    if (c == previous) return c;
    previous = c;
  }
  throw NonIsolatedError("local colength did not stabilize; the point is not an isolated zero");
}

long local_multiplicity(const Ideal& I, const Ideal& P, unsigned n_max) {
  if (I.ring() != P.ring()) throw std::invalid_argument("local multiplicity across rings");
  return local_multiplicity(I, residue_point(P), n_max);
}

ResiduePoint affine_change(const ResiduePoint& p, const std::array<std::array<Rational, 3>, 3>& M) {
  if (p.coords.size() != 2) throw std::invalid_argument("affine_change needs a point of the plane");
  Field K(p.modulus);
  std::array<Field::Elem, 3> a{p.coords[0], p.coords[1], K.scalar(1)};
  std::array<Field::Elem, 3> y;
  for (int i = 0; i < 3; ++i) {
    y[i] = K.zero();
    for (int j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < K.degree(); ++k) y[i][k] += M[i][j] * a[j][k];
  }
  if (Field::is_zero(y[2])) throw std::domain_error("point lies on the line at infinity of the new chart");
  Field::Elem w = K.inv(y[2]);
  return {p.modulus, {K.mul(y[0], w), K.mul(y[1], w)}};
}

namespace {

// g(u) in S/I by Horner, reducing at every step.
Polynomial evaluate_mod(const Ideal& I, const std::vector<Rational>& g, const Polynomial& u) {
  Polynomial r(I.ring());
  for (auto it = g.rbegin(); it != g.rend(); ++it) r = I.normal_form(r * u + Polynomial::constant(I.ring(), *it));
  return r;
}

// True when some power of p kills v in S/I.
bool nilpotent_on(const Ideal& I, const Polynomial& p, Polynomial v, long bound) {
  for (long k = 0; k <= bound; ++k) {
    if (v.is_zero()) return true;
    v = I.normal_form(p * v);
  }
  return v.is_zero();
}

}  // namespace

long local_multiplicity_by_saturation(const Ideal& I, const Ideal& P) {
  long total = I.colength();
  if (total < 0) throw std::domain_error("ideal is not zero-dimensional");
  if (total == 0 || (I + P).is_unit()) return 0;
  // In A = S/I take h in P with minimal polynomial T^e g(T), g(0) != 0. With
  // b = 1/g mod T^e, e0 = (b g)(h) is the idempotent of the part of A where h
  // is nilpotent, and (1 - e0) A = A_h = S/(I : h^inf). When every generator
  // of P is nilpotent on e0 A, h vanishes on V(I) only along V(P), so
  // I : h^inf = I : P^inf and dim S/I - dim S/(I : P^inf) = dim e0 A, which is
  // the trace of multiplication by e0.
  const Ring& T = Ring::get({"T"});
  const auto& basis = P.basis();
  std::vector<Monomial> standard = I.standard_monomials();
  for (long c = 0; c < 64; ++c) {
    Polynomial h = basis[0];
    for (std::size_t i = 1; i < basis.size(); ++i) h += Rational(static_cast<long>(i) * c + 1) * basis[i];
    Polynomial m = minimal_polynomial(I, h, T);
    std::vector<Rational> coef(static_cast<std::size_t>(m.degree()) + 1);
    for (const auto& t : m.terms()) coef[t.mono.e[0]] = t.coef;
    std::size_t e = 0;
    while (coef[e] == 0) ++e;
    if (e == 0) continue;  // h is a unit, so it misses V(P); cannot happen for h in P
    std::vector<Rational> g(coef.begin() + static_cast<long>(e), coef.end());
    // b = 1/g as a power series, truncated below T^e
    std::vector<Rational> b(e);
    for (std::size_t k = 0; k < e; ++k) {
      Rational acc = k == 0 ? Rational(1) : Rational(0);
      for (std::size_t j = 1; j <= k && j < g.size(); ++j) acc -= g[j] * b[k - j];
      b[k] = acc / g[0];
    }
    std::vector<Rational> q(b.size() + g.size() - 1);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) q[i + j] += b[i] * g[j];
    Polynomial e0 = evaluate_mod(I, q, h);
    bool separates = true;
    for (const auto& p : basis) separates = separates && nilpotent_on(I, p, e0, total);
    if (!separates) continue;
    Rational trace = 0;
    for (const auto& s : standard) {
      Polynomial nf = I.normal_form(e0 * Polynomial::monomial(I.ring(), s));
      for (const auto& t : nf.terms())
        if (t.mono == s) trace += t.coef;
    }
    if (trace.get_den() != 1) throw std::logic_error("trace of an idempotent is not an integer");
    return trace.get_num().get_si();
  }
  throw std::logic_error("no separating element for the prime");
}

}  // namespace clfree
