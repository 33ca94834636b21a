#ifndef CLFREE_POLYNOMIAL_HPP
#define CLFREE_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clfree/monomial.hpp"
#include "clfree/ring.hpp"

namespace clfree {

// Sparse polynomial over Q. Terms are kept sorted by decreasing grevlex order
// with no zero coefficients, so equal polynomials have equal term lists.
class Polynomial {
public:
  struct Term {
    Monomial mono;
    Rational coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Polynomial(const Ring& ring) : ring_(&ring) {}

  static Polynomial constant(const Ring& ring, const Rational& c);
  static Polynomial variable(const Ring& ring, std::size_t i);
  static Polynomial variable(const Ring& ring, std::string_view name);
  static Polynomial monomial(const Ring& ring, const Monomial& m, const Rational& c = 1);
  // Sorts and merges arbitrary terms.
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return *ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  int min_degree() const;
  bool is_homogeneous() const;
  // Largest exponent of variable i.
  int degree_in(std::size_t i) const;

  // Leading term under grevlex.
  const Term& leading_term() const { return terms_.front(); }
  const Term& leading_term(MonomialOrder order) const;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned n) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial homogeneous_part(int d) const;

  // Replaces variable i by images[i], producing a polynomial over `target`.
  Polynomial substitute(const Ring& target, std::span<const Polynomial> images) const;
  Rational evaluate(std::span<const Rational> point) const;

  // Scaled copy with coprime integer coefficients and a positive leading
  // coefficient. Zero stays zero.
  Polynomial primitive() const;
  // Scaled copy with leading coefficient one.
  Polynomial monic() const;
  // Least common multiple of the coefficient denominators.
  Integer denominator_lcm() const;

  std::string to_string() const;
  std::size_t hash() const;

private:
  void canonicalize();
  const Ring* ring_;
  std::vector<Term> terms_;
};

// Exact division a / b in Q[vars]; throws if b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
// Divides a by b when possible; returns false otherwise.
bool try_divide(const Polynomial& a, const Polynomial& b, Polynomial& quotient);

Polynomial product(std::span<const Polynomial> factors, const Ring& ring);

struct PolynomialHash {
  std::size_t operator()(const Polynomial& p) const noexcept { return p.hash(); }
};

}  // namespace clfree

#endif
