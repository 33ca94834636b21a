#ifndef CLFREE_RING_HPP
#define CLFREE_RING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace clfree {

using Integer = mpz_class;
using Rational = mpq_class;

// Largest number of variables any ring may carry.
inline constexpr std::size_t kMaxVars = 4;

// A polynomial ring Q[v_0, ..., v_{n-1}], identified by its variable names.
// Rings are interned: two rings with the same names are the same object, so
// identity comparison is enough.
class Ring {
public:
  // Returns the interned ring with the given variable names.
  static const Ring& get(const std::vector<std::string>& vars);

  static const Ring& xyz();  // homogeneous coordinates of the plane
  static const Ring& xy();   // affine chart z = 1
  static const Ring& xz();   // affine chart y = 1
  static const Ring& yz();   // affine chart x = 1, and the line x = 0
  static const Ring& st();   // coordinates of the parametrizing P^1

  std::size_t arity() const { return vars_.size(); }
  const std::string& var(std::size_t i) const { return vars_.at(i); }
  const std::vector<std::string>& vars() const { return vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  // Every variable name is a single character.
  bool single_letter_names() const;

  bool operator==(const Ring& other) const { return this == &other; }

  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

private:
  explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  std::vector<std::string> vars_;
};

std::string to_string(const Rational& q);

}  // namespace clfree

#endif
