#ifndef CLFREE_ARRANGEMENT_HPP
#define CLFREE_ARRANGEMENT_HPP

// Conic-line arrangements in the projective plane over Q: validation, the
// singular locus as Galois clusters, and combinatorial invariants.

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clfree/groebner.hpp"
#include "clfree/linalg.hpp"
#include "clfree/polynomial.hpp"

namespace clfree {

// A line pair is a conic that splits into two lines conjugate over a
// quadratic field, e.g. x^2 + y^2. It stands for two geometric lines.
enum class CurveKind { Line, Conic, LinePair };

std::string kind_name(CurveKind k);
CurveKind parse_kind(const std::string& s);

struct Curve {
  CurveKind kind;
  Polynomial form;  // primitive, positive leading coefficient

  int degree() const { return kind == CurveKind::Line ? 1 : 2; }
  // Number of geometric components.
  int components() const { return kind == CurveKind::LinePair ? 2 : 1; }
};

class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class CLArrangement {
public:
  // Throws ValidationError for empty input, wrong degrees, singular conics,
  // line pairs that split over Q, and repeated components.
  static CLArrangement build(std::vector<Curve> curves);
  // Convenience: kinds inferred from degree and rank (rank 2 gives a line pair).
  static CLArrangement from_forms(const std::vector<Polynomial>& forms);

  const std::vector<Curve>& curves() const { return curves_; }
  std::size_t size() const { return curves_.size(); }
  // Number of geometric curves (a line pair counts twice).
  std::size_t geometric_size() const;
  const Polynomial& F() const { return F_; }
  int degree() const { return F_.degree(); }
  bool lines_only() const;

  CLArrangement without(std::size_t i) const;
  CLArrangement with(const Curve& c) const;
  // Image under X = T X'; the same curves in new coordinates.
  CLArrangement transformed(const Mat3& T) const;

  // Stable identifier of the unordered set of curves.
  std::string hash() const;
  std::string to_string() const;

private:
  std::vector<Curve> curves_;
  Polynomial F_{Ring::xyz()};
};

// Affine chart: new coordinates X' = to_new X, chart given by z' = 1.
struct Chart {
  Mat3 to_new;
  Polynomial line{Ring::xyz()};  // z' as a linear form in x, y, z

  static Chart coordinate(int which);  // 0: z, 1: y, 2: x
  static Chart from_line(const Polynomial& line);
  Polynomial affine(const Polynomial& form) const;  // in Ring::xy()
};

// A Galois orbit of singular points, stored as a prime of the affine chart.
struct SingularCluster {
  Chart chart;
  Ideal prime{Ring::xy(), {}};
  int residue_degree = 1;
  std::vector<std::size_t> incident;                     // curve indices, increasing
  std::map<std::pair<std::size_t, std::size_t>, long> intersections;  // per point, i < j
  int branches = 0;                                      // r, per point
  std::string label;

  bool rational() const { return residue_degree == 1; }
  // Projective coordinates of a rational cluster, normalized.
  std::optional<std::array<Rational, 3>> point() const;
  bool contains(std::size_t curve) const;
};

std::vector<SingularCluster> singular_clusters(const CLArrangement& A);

// Index of the cluster at a rational projective point, if singular.
std::optional<std::size_t> find_cluster(const std::vector<SingularCluster>& clusters,
                                        const std::array<Rational, 3>& p);

// Complex coordinates of the geometric points of a cluster, in a fixed order.
std::vector<std::array<std::complex<double>, 3>> geometric_points(const SingularCluster& c);

enum class EqualityMode { Strict, Incidence };
std::string mode_name(EqualityMode m);
EqualityMode parse_mode(const std::string& s);

// Labeled incidence over the algebraic closure: geometric curves (with
// degrees) and points, with pairwise local intersection numbers at each
// point. Canonical under relabeling of curves and points.
struct CombinatorialType {
  std::vector<int> curve_degrees;
  // One entry per geometric point: sorted triples (i, j, mult), i <= j,
  // with (i, i, 0) marking incidence.
  std::vector<std::vector<std::array<int, 3>>> points;

  std::string canonical(EqualityMode mode) const;
};

struct Combinatorics {
  long h1 = 0;
  long h2 = 0;
  CombinatorialType type;
  // Line arrangements only: mu(p) = r_p - 1 at each geometric point and the
  // Poincare polynomial coefficients.
  std::optional<std::vector<long>> mobius;
  std::optional<std::vector<long>> poincare;
};

CombinatorialType combinatorial_type(const CLArrangement& A, const std::vector<SingularCluster>& clusters);
Combinatorics combinatorics(const CLArrangement& A, const std::vector<SingularCluster>& clusters);
Combinatorics combinatorics(const CLArrangement& A);

bool combinatorially_equal(const CLArrangement& A, const CLArrangement& B, EqualityMode mode = EqualityMode::Strict);

}  // namespace clfree

#endif
