#include "groebner/engine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace clfree::gb {

namespace {

std::uint32_t divmask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    for (std::uint32_t k = 0; k < 8 && m.e[i] > k; ++k) mask |= 1u << (i * 8 + k);
  return mask;
}

struct Elem {
  Vec v;
  Monomial lm;
  std::uint32_t comp;
  std::uint32_t mask;
  long sugar;
  bool active = true;
};

struct Pair {
  std::uint32_t i, j;  // j == kInput marks an input vector stored in i
  Monomial lcm;
  std::uint32_t comp;
  long sugar;
  std::uint64_t id;
};

constexpr std::uint32_t kInput = std::numeric_limits<std::uint32_t>::max();

long vec_sugar(const Vec& v, const Order& order) {
  long s = std::numeric_limits<long>::min();
  for (const auto& t : v) s = std::max(s, order.weight(t.m, t.comp));
  return s;
}

// f <- cf * f - cg * (t * g)
void sub_mul(Vec& f, const Integer& cf, const Integer& cg, const Monomial& t, const Vec& g, const Order& order,
             Vec& scratch) {
  scratch.clear();
  scratch.reserve(f.size() + g.size());
  bool scale_f = cf != 1;
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      if (scale_f) f[i].c *= cf;
      scratch.push_back(std::move(f[i++]));
      continue;
    }
    Monomial gm = g[j].m * t;
    int c = i == f.size() ? -1 : order.cmp(f[i].m, f[i].comp, gm, g[j].comp);
    if (c > 0) {
      if (scale_f) f[i].c *= cf;
      scratch.push_back(std::move(f[i++]));
    } else if (c < 0) {
      scratch.push_back({gm, g[j].comp, -cg * g[j].c});
      ++j;
    } else {
      Integer v = scale_f ? Integer(cf * f[i].c) : f[i].c;
      v -= cg * g[j].c;
      if (v != 0) scratch.push_back({gm, g[j].comp, std::move(v)});
      ++i;
      ++j;
    }
  }
  f.swap(scratch);
}

Vec shifted(const Vec& g, const Monomial& t) {
  Vec r = g;
  for (auto& term : r) term.m = term.m * t;
  return r;
}

class Engine {
public:
  explicit Engine(const Order& order) : order_(order) {}

  std::vector<Vec> run(std::vector<Vec> input) {
    for (auto& v : input) {
      sort_vec(v, order_);
      if (v.empty()) continue;
      make_primitive(v);
      if (v.front().comp != 0) ideal_case_ = false;
      for (const auto& t : v)
        if (t.comp != 0) ideal_case_ = false;
      inputs_.push_back(std::move(v));
    }
    for (std::uint32_t k = 0; k < inputs_.size(); ++k) {
      const Vec& v = inputs_[k];
      pairs_.push_back({k, kInput, v.front().m, v.front().comp, vec_sugar(v, order_), next_id_++});
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (before(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      Vec s;
      long sugar;
      if (p.j == kInput) {
        s = std::move(inputs_[p.i]);
        sugar = p.sugar;
      } else {
        s = spoly(p, sugar);
      }
      reduce_top(s, sugar);
      if (!s.empty()) {
        tail_reduce(s);
        add(std::move(s), sugar);
      }
    }
    return finish();
  }

  // Full reduction against the current active elements.
  Vec full_reduce(Vec f, Rational* scale, std::size_t skip = SIZE_MAX) {
    Vec r, scratch;
    Rational sc = 1;
    std::size_t steps = 0;
    while (!f.empty()) {
      long idx = find_reducer(f.front().m, f.front().comp, skip);
      if (idx < 0) {
        r.push_back(std::move(f.front()));
        f.erase(f.begin());
        continue;
      }
      const Elem& g = elems_[static_cast<std::size_t>(idx)];
      Integer cf, cg;
      coefficients(f.front().c, g.v.front().c, cf, cg);
      if (cf != 1) {
        for (auto& t : r) t.c *= cf;
        sc *= cf;
      }
      sub_mul(f, cf, cg, f.front().m / g.lm, g.v, order_, scratch);
      if (++steps % 4 == 0) {
        // Remove the common content of the reduced and pending parts.
        Integer c = 0;
        for (const auto* part : {&r, &f}) {
          for (const auto& t : *part) {
            mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
            if (c == 1) break;
          }
          if (c == 1) break;
        }
        if (c > 1) {
          for (auto* part : {&r, &f})
            for (auto& t : *part) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
          sc /= c;
        }
      }
    }
    if (scale) *scale = sc;
    return r;
  }

  void load_basis(const std::vector<Vec>& basis) {
    for (const auto& v : basis) {
      if (v.empty()) continue;
      elems_.push_back({v, v.front().m, v.front().comp, divmask(v.front().m), 0, true});
    }
  }

private:
  bool before(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = order_.cmp(a.lcm, a.comp, b.lcm, b.comp);
    if (c != 0) return c < 0;
    return a.id < b.id;
  }

  static void coefficients(const Integer& a, const Integer& b, Integer& cf, Integer& cg) {
    // cf * a == cg * b with cf > 0 minimal.
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    cf = b / g;
    cg = a / g;
    if (cf < 0) {
      cf = -cf;
      cg = -cg;
    }
  }

  long find_reducer(const Monomial& m, std::uint32_t comp, std::size_t skip = SIZE_MAX) const {
    std::uint32_t mask = divmask(m);
    long best = -1;
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      const Elem& e = elems_[k];
      if (!e.active || k == skip || e.comp != comp || (e.mask & ~mask) != 0 || !divides(e.lm, m)) continue;
      if (best < 0 || e.v.size() < elems_[static_cast<std::size_t>(best)].v.size()) best = static_cast<long>(k);
    }
    return best;
  }

  Vec spoly(const Pair& p, long& sugar) {
    const Elem& a = elems_[p.i];
    const Elem& b = elems_[p.j];
    Monomial ta = p.lcm / a.lm, tb = p.lcm / b.lm;
    Vec f = shifted(a.v, ta);
    Integer cf, cg;
    coefficients(a.v.front().c, b.v.front().c, cf, cg);
    Vec scratch;
    sub_mul(f, cf, cg, tb, b.v, order_, scratch);
    make_primitive(f);
    sugar = std::max(a.sugar + ta.degree(), b.sugar + tb.degree());
    return f;
  }

  void reduce_top(Vec& f, long& sugar) {
    Vec scratch;
    while (!f.empty()) {
      long idx = find_reducer(f.front().m, f.front().comp);
      if (idx < 0) break;
      const Elem& g = elems_[static_cast<std::size_t>(idx)];
      Monomial t = f.front().m / g.lm;
      Integer cf, cg;
      coefficients(f.front().c, g.v.front().c, cf, cg);
      sub_mul(f, cf, cg, t, g.v, order_, scratch);
      sugar = std::max(sugar, g.sugar + t.degree());
      make_primitive(f);
    }
  }

  // Reduces every non-leading term; keeps the vector primitive.
  void tail_reduce(Vec& f) {
    Vec tail(std::make_move_iterator(f.begin() + 1), std::make_move_iterator(f.end()));
    Term lead = std::move(f.front());
    Rational scale;
    Vec r = full_reduce(std::move(tail), &scale);
    lead.c *= scale.get_num();
    for (auto& t : r) t.c *= scale.get_den();
    f.clear();
    f.push_back(std::move(lead));
    for (auto& t : r) f.push_back(std::move(t));
    make_primitive(f);
  }

  void add(Vec f, long sugar) {
    std::uint32_t h = static_cast<std::uint32_t>(elems_.size());
    Monomial lm = f.front().m;
    std::uint32_t comp = f.front().comp;
    elems_.push_back({std::move(f), lm, comp, divmask(lm), sugar, true});

    // Gebauer-Moeller update.
    struct Cand {
      Pair p;
      bool coprime;
    };
    std::vector<Cand> cand;
    for (std::uint32_t i = 0; i < h; ++i) {
      const Elem& e = elems_[i];
      if (!e.active || e.comp != comp) continue;
      Monomial l = lcm(e.lm, lm);
      long s = std::max(e.sugar + (l / e.lm).degree(), sugar + (l / lm).degree());
      cand.push_back({{i, h, l, comp, s, 0}, ideal_case_ && coprime(e.lm, lm)});
    }
    std::vector<Cand> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool drop = false;
      if (!cand[a].coprime) {
        for (std::size_t b = a + 1; b < cand.size() && !drop; ++b)
          if (divides(cand[b].p.lcm, cand[a].p.lcm)) drop = true;
        for (std::size_t b = 0; b < kept.size() && !drop; ++b)
          if (divides(kept[b].p.lcm, cand[a].p.lcm)) drop = true;
      }
      if (!drop) kept.push_back(cand[a]);
    }
    // Chain criterion on the old pairs.
    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (p.j != kInput && p.comp == comp && divides(lm, p.lcm) && lcm(elems_[p.i].lm, lm) != p.lcm &&
          lcm(elems_[p.j].lm, lm) != p.lcm)
        continue;
      old.push_back(p);
    }
    pairs_ = std::move(old);
    for (auto& c : kept) {
      if (c.coprime) continue;
      c.p.id = next_id_++;
      pairs_.push_back(c.p);
    }
    for (std::uint32_t i = 0; i < h; ++i) {
      Elem& e = elems_[i];
      if (e.active && e.comp == comp && divides(lm, e.lm)) e.active = false;
    }
  }

  std::vector<Vec> finish() {
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < elems_.size(); ++k)
      if (elems_[k].active) live.push_back(k);
    std::sort(live.begin(), live.end(), [&](std::size_t a, std::size_t b) {
      return order_.cmp(elems_[a].lm, elems_[a].comp, elems_[b].lm, elems_[b].comp) < 0;
    });
    std::vector<Vec> out;
    for (std::size_t k : live) {
      Vec tail(elems_[k].v.begin() + 1, elems_[k].v.end());
      Rational scale;
      Vec r = full_reduce(std::move(tail), &scale, k);
      Vec v;
      v.push_back(elems_[k].v.front());
      // lead * scale must be integral; clear the denominator from the tail.
      Integer num = scale.get_num(), den = scale.get_den();
      v.front().c *= num;
      for (auto& t : r) t.c *= den;
      for (auto& t : r) v.push_back(std::move(t));
      make_primitive(v);
      out.push_back(std::move(v));
    }
    return out;
  }

  Order order_;
  std::vector<Elem> elems_;
  std::vector<Vec> inputs_;
  std::vector<Pair> pairs_;
  std::uint64_t next_id_ = 0;
  bool ideal_case_ = true;
};

}  // namespace

void sort_vec(Vec& v, const Order& order) {
  std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return order.cmp(a, b) > 0; });
  // merge duplicates
  Vec out;
  for (auto& t : v) {
    if (!out.empty() && out.back().m == t.m && out.back().comp == t.comp) {
      out.back().c += t.c;
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(std::move(t));
    }
  }
  v.swap(out);
}

void make_primitive(Vec& v) {
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& t : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  bool neg = v.front().c < 0;
  if (g == 1 && !neg) return;
  if (neg) g = -g;
  for (auto& t : v) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

Vec from_polynomials(const std::vector<Polynomial>& entries, const Order& order) {
  Integer den = 1;
  for (const auto& p : entries) {
    Integer d = p.denominator_lcm();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  Vec v;
  for (std::uint32_t c = 0; c < entries.size(); ++c)
    for (const auto& t : entries[c].terms()) v.push_back({t.mono, c, t.coef.get_num() * (den / t.coef.get_den())});
  sort_vec(v, order);
  return v;
}

Vec from_polynomial(const Polynomial& p, std::uint32_t comp, const Order& order) {
  Integer den = p.denominator_lcm();
  Vec v;
  for (const auto& t : p.terms()) v.push_back({t.mono, comp, t.coef.get_num() * (den / t.coef.get_den())});
  sort_vec(v, order);
  return v;
}

Polynomial to_polynomial(const Vec& v, const Ring& ring, std::uint32_t comp) {
  std::vector<Polynomial::Term> terms;
  for (const auto& t : v)
    if (t.comp == comp) terms.push_back({t.m, Rational(t.c)});
  return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Vec> groebner(std::vector<Vec> input, const Order& order) {
  return Engine(order).run(std::move(input));
}

Vec normal_form(Vec f, const std::vector<Vec>& basis, const Order& order, Rational* scale) {
  sort_vec(f, order);
  Engine e(order);
  e.load_basis(basis);
  return e.full_reduce(std::move(f), scale);
}

std::vector<Vec> syzygies(const std::vector<Vec>& input, std::size_t ambient_rank, const Order& order,
                          std::vector<long>* twists) {
  std::uint32_t r = static_cast<std::uint32_t>(ambient_rank);
  Order aug = order;
  aug.twist.resize(r + input.size(), 0);
  for (std::size_t c = 0; c < r; ++c) aug.twist[c] = order.tw(static_cast<std::uint32_t>(c));
  std::vector<long> w;
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i].empty()) throw std::invalid_argument("syzygies of a zero vector");
    long s = vec_sugar(input[i], order);
    w.push_back(s);
    aug.twist[r + i] = s;
    Vec v = input[i];
    v.push_back({Monomial{}, static_cast<std::uint32_t>(r + i), Integer(-1)});
    vecs.push_back(std::move(v));
  }
  aug.elim_split = r;
  for (auto& v : vecs) sort_vec(v, aug);
  auto basis = groebner(std::move(vecs), aug);
  std::vector<Vec> out;
  for (auto& v : basis) {
    if (v.front().comp < r) continue;
    for (auto& t : v) t.comp -= r;
    out.push_back(std::move(v));
  }
  if (twists) *twists = w;
  return out;
}

std::vector<std::pair<Monomial, std::uint32_t>> leading_terms(const std::vector<Vec>& basis) {
  std::vector<std::pair<Monomial, std::uint32_t>> out;
  for (const auto& v : basis)
    if (!v.empty()) out.emplace_back(v.front().m, v.front().comp);
  return out;
}

}  // namespace clfree::gb
