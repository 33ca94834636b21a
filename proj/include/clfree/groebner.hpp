#ifndef CLFREE_GROEBNER_HPP
#define CLFREE_GROEBNER_HPP

#include <array>
#include <memory>
#include <stdexcept>
#include <vector>

#include "clfree/polynomial.hpp"

namespace clfree {

// Ideal of a polynomial ring. Generators are stored primitive (integer
// content one); zero generators are dropped. Groebner bases are computed on
// demand and cached; copies share the cache.
class Ideal {
public:
  Ideal(const Ring& ring, std::vector<Polynomial> generators);
  static Ideal unit(const Ring& ring);

  const Ring& ring() const { return *ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Reduced Groebner basis, primitive, increasing leading terms.
  const std::vector<Polynomial>& basis(MonomialOrder order = MonomialOrder::Grevlex) const;

  Polynomial normal_form(const Polynomial& f, MonomialOrder order = MonomialOrder::Grevlex) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const { return gens_.empty(); }
  bool is_homogeneous() const;

  // dim_Q R/I, or -1 when infinite.
  long colength() const;
  // Monomials outside the initial ideal (grevlex); requires finite colength.
  std::vector<Monomial> standard_monomials() const;

  Ideal power(unsigned n) const;
  friend Ideal operator+(const Ideal& a, const Ideal& b);
  friend Ideal operator*(const Ideal& a, const Ideal& b);
  // Same ideal (compares reduced grevlex bases).
  friend bool operator==(const Ideal& a, const Ideal& b);

private:
  struct Cache;
  const Ring* ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

// Hilbert series of R/I written as numerator / (1 - t)^n, n = arity.
struct HilbertData {
  std::vector<Integer> numerator;  // coefficient of t^i at index i
  int dimension = 0;               // Krull dimension of R/I
  Integer degree;                  // multiplicity of R/I
  // numerator / (1 - t)^(n - dimension), reduced.
  std::vector<Integer> reduced_numerator;

  // Value of the Hilbert polynomial at t.
  Integer polynomial_value(long t) const;
  std::string numerator_string() const;
};

// Hilbert data from a monomial ideal in n variables; also used for modules.
HilbertData hilbert_from_numerator(std::vector<Integer> numerator, std::size_t nvars);
std::vector<Integer> hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars);

// Throws std::invalid_argument for non-homogeneous ideals.
HilbertData hilbert(const Ideal& I);

Ideal quotient(const Ideal& I, const Ideal& J);
Ideal saturate(const Ideal& I, const Ideal& J);
Ideal intersect(const Ideal& I, const Ideal& J);

// Raised when a local colength does not stabilize: the point is not an
// isolated zero of the ideal.
class NonIsolatedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Sum over the points of V(P) of the local colength of I, for a zero
// dimensional prime P. Colength of I + P^N for N = 1, 2, ... up to n_max,
// stopping when two consecutive values agree.
long local_multiplicity(const Ideal& I, const Ideal& P, unsigned n_max = 64);

// Independent route: colength(I) - colength(I : P^infinity). Requires I of
// finite colength.
long local_multiplicity_by_saturation(const Ideal& I, const Ideal& P);

// One point of V(P) for a zero-dimensional prime P, with coordinates in the
// residue field Q[u]/(modulus). `modulus` is monic with coefficients in
// increasing degree; coords[v] holds the coefficients of x_v as a polynomial
// in u of degree below the residue degree.
struct ResiduePoint {
  std::vector<Rational> modulus;
  std::vector<std::vector<Rational>> coords;
  std::size_t degree() const { return modulus.size() - 1; }
};
ResiduePoint residue_point(const Ideal& P);

// Same as local_multiplicity(I, P) for the prime of the given point.
long local_multiplicity(const Ideal& I, const ResiduePoint& p, unsigned n_max = 64);

// Image of an affine point (a, b) under (a, b, 1) -> M (a, b, 1), dehomogenized
// by the last coordinate. Throws std::domain_error when that coordinate is 0.
ResiduePoint affine_change(const ResiduePoint& p, const std::array<std::array<Rational, 3>, 3>& M);

// Minimal polynomial of u modulo a zero-dimensional ideal, as a polynomial
// in the single variable of `target`. Monic.
Polynomial minimal_polynomial(const Ideal& I, const Polynomial& u, const Ring& target);

// Radical of a zero-dimensional ideal.
Ideal radical_zero_dim(const Ideal& I);

// Associated primes of a zero-dimensional ideal, in a deterministic order.
std::vector<Ideal> prime_decomposition_zero_dim(const Ideal& I);

}  // namespace clfree

#endif
