#include "clfree/localinv.hpp"

#include <random>

#include "clfree/linalg.hpp"

namespace clfree {

namespace {

struct Site {
  Chart chart;
  ResiduePoint point;
  long degree;
};

Site site(const SingularCluster& c, const LocalOptions& opts) {
  Chart ch = local_chart(c, opts);
  ResiduePoint p = residue_point(c.prime);
  if (opts.chart_seed) {
    Mat3 M = ch.to_new * c.chart.to_new.inverse();
    p = affine_change(p, M.a);
  }
  return {ch, p, static_cast<long>(p.degree())};
}

bool passes_through(const Polynomial& G, const SingularCluster& c) {
  return c.prime.contains(c.chart.affine(G));
}

long per_point(long total, long d) {
  if (total % d != 0) throw std::logic_error("local value not divisible by the residue degree");
  return total / d;
}

}  // namespace

Chart local_chart(const SingularCluster& c, const LocalOptions& opts) {
  if (!opts.chart_seed) return c.chart;
  std::mt19937_64 rng(*opts.chart_seed);
  std::uniform_int_distribution<int> coef(-7, 7);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec3 v{Rational(coef(rng)), Rational(coef(rng)), Rational(coef(rng))};
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
    Polynomial line = linear_form(v);
    if (passes_through(line, c)) continue;
    return Chart::from_line(line);
  }
  throw std::logic_error("no chart found");
}

long milnor_of(const Polynomial& G, const SingularCluster& c, const LocalOptions& opts) {
  if (!passes_through(G, c)) return 0;
  Site s = site(c, opts);
  Polynomial g = s.chart.affine(G);
  Ideal I(Ring::xy(), {g.derivative(0), g.derivative(1)});
  return per_point(local_multiplicity(I, s.point), s.degree);
}

long milnor(const CLArrangement& A, const SingularCluster& c, const LocalOptions& opts) {
  return milnor_of(A.F(), c, opts);
}

long tjurina(const CLArrangement& A, const SingularCluster& c, const LocalOptions& opts) {
  Site s = site(c, opts);
  Polynomial f = s.chart.affine(A.F());
  Ideal I(Ring::xy(), {f.derivative(0), f.derivative(1), f});
  return per_point(local_multiplicity(I, s.point), s.degree);
}

long intersection_multiplicity(const Polynomial& X, const Polynomial& Y, const SingularCluster& c,
                               const LocalOptions& opts) {
  if (hilbert(Ideal(Ring::xyz(), {X, Y})).dimension > 1)
    throw std::invalid_argument("curves share a component: " + X.to_string() + ", " + Y.to_string());
  if (!passes_through(X, c) || !passes_through(Y, c)) return 0;
  Site s = site(c, opts);
  Ideal I(Ring::xy(), {s.chart.affine(X), s.chart.affine(Y)});
  return per_point(local_multiplicity(I, s.point), s.degree);
}

AdditivityCheck milnor_additivity(const Polynomial& X, const Polynomial& Y, const SingularCluster& c,
                                  const LocalOptions& opts) {
  AdditivityCheck r;
  r.mu_union = milnor_of(X * Y, c, opts);
  r.mu_x = milnor_of(X, c, opts);
  r.mu_y = milnor_of(Y, c, opts);
  r.intersection = intersection_multiplicity(X, Y, c, opts);
  return r;
}

bool milnor_additivity_check(const Polynomial& X, const Polynomial& Y, const SingularCluster& c,
                             const LocalOptions& opts) {
  return milnor_additivity(X, Y, c, opts).holds();
}

std::vector<LocalInvariants> local_invariants(const CLArrangement& A, const std::vector<SingularCluster>& clusters,
                                              const LocalOptions& opts) {
  std::vector<LocalInvariants> out;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const SingularCluster& c = clusters[i];
    LocalInvariants li;
    li.cluster = i;
    li.mu = milnor(A, c, opts);
    li.tau = tjurina(A, c, opts);
    if (li.tau > li.mu) throw std::logic_error("tau exceeds mu at " + c.label);
    long r = c.branches;
    // Pairwise intersections equal the product of branch counts; a line pair
    // has two branches at its vertex.
    auto branches_of = [&](std::size_t k) {
      const Curve& curve = A.curves()[k];
      return curve.kind == CurveKind::LinePair && milnor_of(curve.form, c, opts) > 0 ? 2L : 1L;
    };
    bool transverse = true;
    for (const auto& [ij, m] : c.intersections)
      if (m != branches_of(ij.first) * branches_of(ij.second)) transverse = false;
    li.ordinary = transverse && li.mu == (r - 1) * (r - 1);
    out.push_back(li);
  }
  return out;
}

Ideal jacobian_ideal(const Polynomial& F) {
  return Ideal(F.ring(), {F.derivative(0), F.derivative(1), F.derivative(2)});
}

Ideal jacobian_ideal(const CLArrangement& A) { return jacobian_ideal(A.F()); }

Ideal affine_jacobian_ideal(const Polynomial& F, const Chart& chart) {
  Mat3 M = dehomogenize(F, chart.line).to_new;
  Ideal J = jacobian_ideal(linear_change(F, M.inverse()));
  const Ring& A = Ring::xy();
  std::vector<Polynomial> images{Polynomial::variable(A, 0), Polynomial::variable(A, 1), Polynomial::constant(A, 1)};
  std::vector<Polynomial> gens;
  for (const auto& g : J.basis()) gens.push_back(g.substitute(A, images));
  return Ideal(A, std::move(gens));
}

long jacobian_degree(const Polynomial& F) {
  Ideal J = jacobian_ideal(F);
  if (J.is_unit()) return 0;
  HilbertData h = hilbert(J);
  if (h.dimension == 0) return 0;
  if (h.dimension != 1) throw std::logic_error("singular locus of a reduced curve is not finite");
  return h.degree.get_si();
}

QuasihomogeneityReport quasihomogeneity(const CLArrangement& A, const std::vector<SingularCluster>& clusters,
                                        const LocalOptions& opts) {
  QuasihomogeneityReport r;
  r.points = local_invariants(A, clusters, opts);
  for (const auto& li : r.points) {
    long d = clusters[li.cluster].residue_degree;
    r.sum_mu += d * li.mu;
    r.sum_tau += d * li.tau;
    if (!li.quasihomogeneous()) r.failing.push_back(li.cluster);
  }
  r.jacobian_degree = jacobian_degree(A.F());
  return r;
}

QuasihomogeneityReport quasihomogeneity(const CLArrangement& A, const LocalOptions& opts) {
  return quasihomogeneity(A, singular_clusters(A), opts);
}

}  // namespace clfree
