#ifndef CLFREE_GROEBNER_ENGINE_HPP
#define CLFREE_GROEBNER_ENGINE_HPP

// Buchberger kernel shared by ideals and submodules of graded free modules.
// Vectors are sparse lists of (monomial, component, integer coefficient)
// sorted by decreasing module order.

#include <cstdint>
#include <limits>
#include <vector>

#include "clfree/polynomial.hpp"

namespace clfree::gb {

struct Term {
  Monomial m;
  std::uint32_t comp = 0;
  Integer c;
};

using Vec = std::vector<Term>;

inline constexpr std::uint32_t kNoElimination = std::numeric_limits<std::uint32_t>::max();

// Module order. Components at or above `elim_split` form a block that is
// smaller than every term of the lower components. Within a block, grevlex
// compares the weighted degree deg(m) + twist[comp] first, then grevlex on
// monomials, then prefers lower component indices.
struct Order {
  MonomialOrder base = MonomialOrder::Grevlex;
  std::size_t nvars = 3;
  std::vector<long> twist;
  std::uint32_t elim_split = kNoElimination;

  long tw(std::uint32_t c) const { return c < twist.size() ? twist[c] : 0; }
  long weight(const Monomial& m, std::uint32_t c) const { return m.degree() + tw(c); }

  int cmp(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    bool la = ca >= elim_split, lb = cb >= elim_split;
    if (la != lb) return la ? -1 : 1;
    if (base == MonomialOrder::Grevlex) {
      long wa = weight(a, ca), wb = weight(b, cb);
      if (wa != wb) return wa > wb ? 1 : -1;
      int c = compare_grevlex(a, b, nvars);
      if (c != 0) return c;
    } else {
      int c = compare_lex(a, b, nvars);
      if (c != 0) return c;
    }
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int cmp(const Term& a, const Term& b) const { return cmp(a.m, a.comp, b.m, b.comp); }
};

Vec from_polynomial(const Polynomial& p, std::uint32_t comp, const Order& order);
// Scales to integer coefficients; the scale is discarded.
Vec from_polynomials(const std::vector<Polynomial>& entries, const Order& order);
Polynomial to_polynomial(const Vec& v, const Ring& ring, std::uint32_t comp = 0);
void sort_vec(Vec& v, const Order& order);

// Divides out the content and makes the leading coefficient positive.
void make_primitive(Vec& v);

// Reduced Groebner basis, primitive with positive leading coefficients,
// sorted by increasing leading term.
std::vector<Vec> groebner(std::vector<Vec> input, const Order& order);

// Full normal form of f modulo a Groebner basis. On return
// scale * f - result lies in the submodule; scale is a positive rational.
Vec normal_form(Vec f, const std::vector<Vec>& basis, const Order& order, Rational* scale = nullptr);

// Syzygies of the given vectors: generators of the kernel of
// S^m -> ambient, e_i -> input[i]. Entries of the result live in
// components 0..m-1 and are sorted by `order` restricted to the ambient
// twists replaced with `twists` (the largest weighted degree of each input,
// written to *twists when requested). Input vectors must be nonzero.
std::vector<Vec> syzygies(const std::vector<Vec>& input, std::size_t ambient_rank, const Order& order,
                          std::vector<long>* twists = nullptr);

// Leading monomials per component of a basis.
std::vector<std::pair<Monomial, std::uint32_t>> leading_terms(const std::vector<Vec>& basis);

}  // namespace clfree::gb

#endif
