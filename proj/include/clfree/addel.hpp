#ifndef CLFREE_ADDEL_HPP
#define CLFREE_ADDEL_HPP

// Addition and deletion of a line or a smooth conic: triples (A', A, A''),
// the restriction count k, exponent inference, freeness certificates, rank 2
// multiarrangements and the restriction maps on derivations.

#include <optional>
#include <string>
#include <vector>

#include "clfree/arrangement.hpp"
#include "clfree/freeness.hpp"

namespace clfree {

// A = full, A' = deleted = A minus curve `removed`, A'' = restriction of A'
// to the removed curve: k distinct points.
struct Triple {
  CLArrangement full;
  std::size_t removed = 0;
  CLArrangement deleted;
  long k = 0;
  // Clusters of `full` on the removed curve met by another curve; residue
  // degrees add up to k.
  std::vector<SingularCluster> restriction;

  const Curve& curve() const { return full.curves()[removed]; }
};

// Throws std::out_of_range for a bad index and std::invalid_argument when
// the curve is a line pair or A has a single curve.
Triple make_triple(const CLArrangement& A, std::size_t i);

// tau = mu at every singular point of A' and of A.
bool quasihomogeneous_triple(const Triple& T);

enum class Status { Free, NotFree, Inconclusive };
std::string status_name(Status s);

struct Claim {
  Status status = Status::Inconclusive;
  std::vector<long> exponents;  // increasing, with the Euler 1, when free
  static Claim from(const FreenessVerdict& v);
  friend bool operator==(const Claim&, const Claim&) = default;
};

enum class Side { Deleted, Full };

// Exponent patterns alone, for a line (k points) and a conic (k points).
// `known` is the claim for `side`; the result is the claim for the other side.
Claim line_rule(const Claim& known, Side side, long k);
Claim conic_rule(const Claim& known, Side side, long k);

// The rules above, applied only after checking that the removed curve has
// the right kind and that the triple is quasihomogeneous.
Claim infer_line(const Triple& T, const Claim& known, Side side);
Claim infer_conic(const Triple& T, const Claim& known, Side side);

struct CertificateStep {
  std::string hash;
  std::string arrangement;
  std::vector<Curve> curves;  // of the arrangement this step is about
  std::string rule;  // "direct", "line", "conic-even", "conic-odd"
  std::string removed;  // form of the deleted curve, empty for direct
  long k = 0;
  bool quasihomogeneous = false;
  Claim claim;
};

struct FreenessCertificate {
  // chain[0] is the direct base; each later step adds one curve.
  std::vector<CertificateStep> chain;
  Claim claim() const { return chain.back().claim; }
  // Direct verdict on the final arrangement, when computed.
  std::optional<Claim> direct;
  bool consistent() const { return !direct || *direct == claim(); }
  std::string transcript() const;
};

// Depth-first search over deletions: lines before conics, lowest k first.
// Every inference is rechecked; falls back to a direct computation. With
// cross_check the final claim is compared with the direct verdict.
FreenessCertificate certify(const CLArrangement& A, bool cross_check = true);

// Points of P^1 with multiplicities. A point is given by an irreducible
// binary form in s, t; a form of degree e stands for e conjugate points,
// each with the same multiplicity.
struct MultiPoint {
  Polynomial form;
  long multiplicity = 1;
};

struct Multiarrangement2 {
  std::vector<MultiPoint> points;
  long total_multiplicity() const;
  std::size_t geometric_points() const;
  // Multiplicities of the geometric points, decreasing.
  std::vector<long> multiplicities() const;
};

// Restriction of the other curves to line i, with intersection numbers as
// multiplicities. Coordinates on the line come from a kernel basis of its
// coefficient vector.
Multiarrangement2 multirestrict(const CLArrangement& A, std::size_t i);

// Degrees of a basis of the (free, rank 2) module of derivations theta with
// theta(l) in (l^m) for every point, increasing.
std::vector<long> multi_exponents(const Multiarrangement2& M);

// q for a line and rho for a conic, after moving the removed curve to x = 0
// or to y^2 - xz.
struct RestrictedDerivation {
  CurveKind kind = CurveKind::Line;
  Polynomial first{Ring::yz()};   // d/dy coefficient, or Q1 in s, t
  Polynomial second{Ring::yz()};  // d/dz coefficient, or Q2 in s, t
  // Defining form of the reduced points of A'' in the same coordinates.
  Polynomial restricted{Ring::yz()};
  // The image is a derivation of A''.
  bool tangent() const;
};

// Throws std::invalid_argument when theta is not a derivation of the full
// arrangement, and std::runtime_error when the conic has no small rational
// point to normalize with.
RestrictedDerivation restrict_derivation(const Derivation& theta, const Triple& T);

// Small-height rational point on a conic, if one is found.
std::optional<Vec3> rational_point(const Polynomial& conic);
// M with conic(M X) = c (y^2 - xz), c != 0, built from a rational point.
Mat3 conic_normalization(const Polynomial& conic, const Vec3& point);

}  // namespace clfree

#endif
