#ifndef CLFREE_RESOLVE_HPP
#define CLFREE_RESOLVE_HPP

// Graded submodules of free modules over a polynomial ring, their syzygies
// and minimal free resolutions.

#include <map>
#include <string>
#include <vector>

#include "clfree/polynomial.hpp"

namespace clfree {

// Direct sum of S(-a) over the twists a. Generator i lives in degree twists[i].
struct GradedFreeModule {
  std::vector<long> twists;

  std::size_t rank() const { return twists.size(); }
  // Multiset of twists in increasing order.
  std::vector<long> sorted_twists() const;
  // Numerator of the Hilbert series over (1-t)^n: sum of t^a.
  std::vector<Integer> hilbert_numerator() const;
  // "S(-2)+S(-3)^2", or "0" for the zero module.
  std::string to_string() const;
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

using Vector = std::vector<Polynomial>;

// Matrix of polynomials; column j is the image of the j-th source generator.
class PolyMatrix {
public:
  PolyMatrix(const Ring& ring, std::size_t rows, std::size_t cols);
  static PolyMatrix from_columns(const Ring& ring, std::size_t rows, const std::vector<Vector>& columns);

  const Ring& ring() const { return *ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vector column(std::size_t c) const;
  bool is_zero() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

private:
  const Ring* ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> data_;
};

// Submodule of `ambient` generated by homogeneous vectors.
class PresentedModule {
public:
  // Throws std::invalid_argument when a generator is not homogeneous with
  // respect to the ambient twists or has the wrong length. Zero generators
  // are dropped.
  PresentedModule(const Ring& ring, GradedFreeModule ambient, std::vector<Vector> generators);

  const Ring& ring() const { return *ring_; }
  const GradedFreeModule& ambient() const { return ambient_; }
  const std::vector<Vector>& generators() const { return gens_; }
  const std::vector<long>& degrees() const { return degrees_; }
  // The free module mapping onto this one, generator i in degree degrees()[i].
  GradedFreeModule cover() const { return {degrees_}; }
  PolyMatrix matrix() const { return PolyMatrix::from_columns(*ring_, ambient_.rank(), gens_); }
  bool contains(const Vector& v) const;

private:
  const Ring* ring_;
  GradedFreeModule ambient_;
  std::vector<Vector> gens_;
  std::vector<long> degrees_;
};

// Generators of the kernel of cover() -> ambient, as a submodule of cover().
PresentedModule syzygies(const PresentedModule& M);

// Drops generators lying in the span of the others, lowest degrees first.
// The result is a minimal generating set of the same submodule.
PresentedModule minimal_generators(const PresentedModule& M);

// steps[0] <- steps[1] <- ... with maps[i] : steps[i+1] -> steps[i]. The
// augmentation sends steps[0] onto the module inside its ambient.
struct GradedResolution {
  std::vector<GradedFreeModule> steps;
  std::vector<PolyMatrix> maps;
  std::vector<PolyMatrix> augmentation;  // empty or a single matrix
  bool minimal = false;

  // Number of maps between nonzero steps; 0 for a free module.
  std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
  // Consecutive compositions vanish, including the augmentation.
  bool is_complex() const;
  // betti[(step, twist)] = multiplicity of S(-twist) in steps[step].
  std::map<std::pair<std::size_t, long>, long> betti() const;
  // Rows are twists, columns are homological steps.
  std::string betti_table() const;
  // Alternating sum of the step numerators.
  std::vector<Integer> hilbert_numerator() const;
};

// Splits off trivial pieces S(-a) -> S(-a) given by nonzero constant entries,
// until no map has a constant nonzero entry.
GradedResolution minimalize(GradedResolution R);

// Minimal graded free resolution of M.
GradedResolution free_resolution(const PresentedModule& M);

// Hilbert series of M as numerator / (1-t)^denominator_power.
struct ModuleHilbertSeries {
  std::vector<Integer> numerator;
  int denominator_power = 3;
  std::string to_string() const;
  friend bool operator==(const ModuleHilbertSeries&, const ModuleHilbertSeries&) = default;
};

ModuleHilbertSeries module_hilbert_series(const PresentedModule& M);
ModuleHilbertSeries module_hilbert_series(const GradedFreeModule& F, int denominator_power = 3);

}  // namespace clfree

#endif
