#ifndef CLFREE_FREENESS_HPP
#define CLFREE_FREENESS_HPP

// Logarithmic derivations of an arrangement and the freeness verdict.
// D(A) = S E + D0(A), with E the Euler derivation and D0 the derivations
// killing F, i.e. syzygies on (F_x, F_y, F_z).

#include <array>
#include <string>
#include <vector>

#include "clfree/arrangement.hpp"
#include "clfree/resolve.hpp"

namespace clfree {

// a[0] d/dx + a[1] d/dy + a[2] d/dz, coefficients homogeneous of one degree.
struct Derivation {
  std::array<Polynomial, 3> a{Polynomial(Ring::xyz()), Polynomial(Ring::xyz()), Polynomial(Ring::xyz())};

  static Derivation euler();
  static Derivation from_vector(const Vector& v);
  bool is_zero() const;
  // Common degree of the coefficients; -1 for zero. Throws
  // std::invalid_argument when the coefficients are not homogeneous of one degree.
  int degree() const;
  Polynomial apply(const Polynomial& f) const;
  std::string to_string() const;
};

// D0 as a submodule of S^3 (twists 0, so a generator's degree is the degree
// of its coefficients), minimally generated.
PresentedModule derivation_module(const Polynomial& F);
PresentedModule derivation_module(const CLArrangement& A);

struct FreenessVerdict {
  bool free = false;
  std::vector<long> exponents;  // with the Euler 1, increasing; empty unless free
  GradedResolution resolution;  // of D0, in derivation degrees
  ModuleHilbertSeries hilbert;  // of D0
  std::vector<Derivation> generators;  // minimal generators of D0
  // Add to every twist to read the resolution as syzygies on J_F.
  long jacobian_shift = 0;
};

FreenessVerdict freeness_verdict(const Polynomial& F);
FreenessVerdict freeness_verdict(const CLArrangement& A);

// theta(f) lies in (f) for every curve f; the same test on F is run as well
// and the two must agree.
bool is_derivation(const Derivation& theta, const CLArrangement& A);

// Three derivations of A whose coefficient determinant is a nonzero constant
// times F.
bool saito_check(const std::array<Derivation, 3>& thetas, const CLArrangement& A);

// Value of 3 C(t+2,2) - C(t+2+d,2) + deg J at t, d = deg F - 1.
Integer derivation_hilbert_polynomial(long deg_F, long jacobian_degree, long t);
// Value of the Hilbert polynomial of numerator / (1-t)^3 at t.
Integer hilbert_polynomial_value(const std::vector<Integer>& numerator, long t);

}  // namespace clfree

#endif
