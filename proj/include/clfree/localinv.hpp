#ifndef CLFREE_LOCALINV_HPP
#define CLFREE_LOCALINV_HPP

// Milnor and Tjurina numbers, local intersection numbers and the global
// count deg(J_F) = sum of Tjurina numbers.

#include <optional>
#include <vector>

#include "clfree/arrangement.hpp"

namespace clfree {

// By default each cluster is examined in the chart it was found in. A seed
// switches to a pseudo-random chart whose line at infinity misses the cluster;
// results must not change.
struct LocalOptions {
  std::optional<unsigned long> chart_seed;
};

// Chart used for local computations at c.
Chart local_chart(const SingularCluster& c, const LocalOptions& opts = {});

// Per-point values; cluster values divided by the residue degree.
long milnor(const CLArrangement& A, const SingularCluster& c, const LocalOptions& opts = {});
long tjurina(const CLArrangement& A, const SingularCluster& c, const LocalOptions& opts = {});
// Milnor number of the curve G = 0 at the points of c (0 where G is smooth).
long milnor_of(const Polynomial& G, const SingularCluster& c, const LocalOptions& opts = {});
// Local intersection number of X = 0 and Y = 0 at a point of c. Throws
// std::invalid_argument when X and Y share a component.
long intersection_multiplicity(const Polynomial& X, const Polynomial& Y, const SingularCluster& c,
                               const LocalOptions& opts = {});

// mu(X u Y) = mu(X) + mu(Y) + 2 (X.Y) - 1, every term computed separately.
struct AdditivityCheck {
  long mu_union = 0, mu_x = 0, mu_y = 0, intersection = 0;
  bool holds() const { return mu_union == mu_x + mu_y + 2 * intersection - 1; }
};
AdditivityCheck milnor_additivity(const Polynomial& X, const Polynomial& Y, const SingularCluster& c,
                                  const LocalOptions& opts = {});
bool milnor_additivity_check(const Polynomial& X, const Polynomial& Y, const SingularCluster& c,
                             const LocalOptions& opts = {});

struct LocalInvariants {
  std::size_t cluster = 0;  // index into the cluster list
  long mu = 0;
  long tau = 0;
  // Transverse branches and mu = (r - 1)^2.
  bool ordinary = false;
  bool quasihomogeneous() const { return mu == tau; }
};

std::vector<LocalInvariants> local_invariants(const CLArrangement& A, const std::vector<SingularCluster>& clusters,
                                              const LocalOptions& opts = {});

Ideal jacobian_ideal(const Polynomial& F);
Ideal jacobian_ideal(const CLArrangement& A);
// (f, f_x, f_y) for f = F in the chart, i.e. J_F dehomogenized. The
// generators are a dehomogenized grevlex basis of J_F (chart variable last),
// which is already a Groebner basis of the affine ideal; far cheaper than
// running Buchberger on (f, f_x, f_y) directly.
Ideal affine_jacobian_ideal(const Polynomial& F, const Chart& chart);
// Degree of the scheme S/J_F; 0 for a smooth curve.
long jacobian_degree(const Polynomial& F);

struct QuasihomogeneityReport {
  std::vector<LocalInvariants> points;
  std::vector<std::size_t> failing;  // cluster indices with tau < mu
  long sum_mu = 0;                   // weighted by residue degree
  long sum_tau = 0;
  long jacobian_degree = 0;
  bool all() const { return failing.empty(); }
};

QuasihomogeneityReport quasihomogeneity(const CLArrangement& A, const std::vector<SingularCluster>& clusters,
                                        const LocalOptions& opts = {});
QuasihomogeneityReport quasihomogeneity(const CLArrangement& A, const LocalOptions& opts = {});

}  // namespace clfree

#endif
