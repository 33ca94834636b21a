#ifndef CLFREE_FACTOR_HPP
#define CLFREE_FACTOR_HPP

#include <vector>

#include "clfree/polynomial.hpp"

namespace clfree {

struct Factor {
  Polynomial factor;
  int multiplicity;
};

// unit * prod factor^multiplicity == input.
struct Factorization {
  Rational unit;
  std::vector<Factor> factors;

  Polynomial expand(const Ring& ring) const;
};

// Factors a polynomial in which at most one variable occurs. Factors are monic,
// irreducible over Q, pairwise distinct, ordered by (degree, text).
// Throws std::domain_error on zero input.
Factorization factor_univariate(const Polynomial& p);

// Factors a homogeneous form in a two-variable ring (s, t). A power of the
// second variable (the point at infinity of the first chart) is split off
// first; remaining factors are monic in the first variable.
Factorization factor_binary_form(const Polynomial& f);

// Squarefree decomposition of a univariate polynomial: monic factors a_i with
// p = c * prod a_i^i.
std::vector<Factor> squarefree_decomposition(const Polynomial& p);

// Product of the distinct irreducible factors, made monic (or primitive for
// binary forms).
Polynomial squarefree_part(const Polynomial& p);

// Number of distinct roots in P^1 of a nonzero binary form.
int distinct_root_count(const Polynomial& binary_form);

}  // namespace clfree

#endif
