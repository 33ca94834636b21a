#include "clfree/localinv.hpp"
#include "named_arrangements.hpp"
#include "test_support.hpp"

using namespace clfree;
using named::make;

namespace {

std::array<Rational, 3> origin() { return {Rational(0), Rational(0), Rational(1)}; }

const SingularCluster& at(const std::vector<SingularCluster>& cs, const std::array<Rational, 3>& p) {
  auto k = find_cluster(cs, p);
  REQUIRE(k);
  return cs[*k];
}

Polynomial P(const char* s) { return parse_poly(s, Ring::xyz()); }

}  // namespace

TEST_CASE("pencil with a conic") {
  CLArrangement A = named::pencil_and_conic();
  auto cs = singular_clusters(A);
  const SingularCluster& o = at(cs, origin());
  CHECK(milnor(A, o) == 16);
  CHECK(tjurina(A, o) == 15);
  auto q = quasihomogeneity(A, cs);
  CHECK(q.sum_mu == 20);
  CHECK(q.jacobian_degree == 19);
  CHECK(q.sum_tau == 19);
  REQUIRE(q.failing.size() == 1);
  CHECK(cs[q.failing[0]].label == "(0:0:1)");
  for (const auto& li : q.points) CHECK(li.ordinary);
}

TEST_CASE("nodes and tangencies") {
  CLArrangement node = make({"x", "y"});
  auto cs = singular_clusters(node);
  REQUIRE(cs.size() == 1);
  CHECK(milnor(node, cs[0]) == 1);
  CHECK(tjurina(node, cs[0]) == 1);
  CHECK(intersection_multiplicity(P("x"), P("y"), cs[0]) == 1);

  CLArrangement tangent = make({"y^2-xz", "x"});
  auto ct = singular_clusters(tangent);
  REQUIRE(ct.size() == 1);
  CHECK(intersection_multiplicity(P("y^2-xz"), P("x"), ct[0]) == 2);
  CHECK(milnor(tangent, ct[0]) == 3);
  CHECK(milnor_additivity_check(P("y^2-xz"), P("x"), ct[0]));
  auto q = quasihomogeneity(tangent);
  CHECK(q.all());
  CHECK(!q.points[0].ordinary);
  CHECK_THROWS_AS(intersection_multiplicity(P("x*y"), P("x"), ct[0]), std::invalid_argument);
}

TEST_CASE("milnor additivity at a pencil point") {
  CLArrangement A = named::pencil_and_conic();
  auto cs = singular_clusters(A);
  const SingularCluster& o = at(cs, origin());
  AdditivityCheck a = milnor_additivity(P("x*y*(x-y)*(x-2y)"), P("x^2-xz+y^2-yz"), o);
  CHECK(a.mu_x == 9);
  CHECK(a.mu_y == 0);
  CHECK(a.intersection == 4);
  CHECK(a.mu_union == 16);
  CHECK(a.holds());
}

TEST_CASE("smooth and degenerate curves") {
  CLArrangement conic = make({"y^2-xz"});
  CHECK(singular_clusters(conic).empty());
  auto q = quasihomogeneity(conic);
  CHECK(q.all());
  CHECK(q.jacobian_degree == 0);
  CHECK(jacobian_degree(P("x")) == 0);
}

TEST_CASE("two conics and lines") {
  auto q = quasihomogeneity(named::two_conics_three_lines());
  CHECK(q.all());
  CHECK(q.sum_mu == 28);
  CHECK(q.jacobian_degree == 28);
  auto q2 = quasihomogeneity(named::two_conics_four_lines());
  CHECK(q2.all());
  CHECK(q2.jacobian_degree == 39);
  CLArrangement T = named::two_conics_four_lines_tangent();
  auto cs = singular_clusters(T);
  auto q3 = quasihomogeneity(T, cs);
  CHECK(q3.sum_mu == 38);
  CHECK(q3.jacobian_degree == 37);
  REQUIRE(q3.failing.size() == 1);
  CHECK(cs[q3.failing[0]].label == "(0:0:1)");
}

TEST_CASE("conic families") {
  CLArrangement A = make(named::circles());
  auto cs = singular_clusters(A);
  auto q = quasihomogeneity(A, cs);
  CHECK(q.sum_tau == q.jacobian_degree);
  REQUIRE(q.failing.size() == 1);
  CHECK(cs[q.failing[0]].label == "(0:0:1)");
  const SingularCluster& o = at(cs, origin());
  CHECK(milnor(A, o) == 16);
  CHECK(tjurina(A, o) == 15);
  for (const auto& li : q.points) CHECK(li.ordinary);

  CLArrangement B = make(named::skew_conics());
  auto cb = singular_clusters(B);
  auto qb = quasihomogeneity(B, cb);
  CHECK(qb.sum_tau == qb.jacobian_degree);
  CHECK(qb.failing.size() == 3);
  for (auto p : {origin(), std::array<Rational, 3>{1, 0, 1}, std::array<Rational, 3>{0, 1, 1}}) {
    const SingularCluster& c = at(cb, p);
    CHECK(milnor(B, c) == 16);
    CHECK(tjurina(B, c) == 15);
  }
}

TEST_CASE("generic charts give the same numbers") {
  CLArrangement A = named::circles_with_lines();
  auto cs = singular_clusters(A);
  auto base = local_invariants(A, cs);
  for (unsigned long seed : {1ul, 17ul}) {
    auto other = local_invariants(A, cs, LocalOptions{seed});
    REQUIRE(other.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      CHECK(other[i].mu == base[i].mu);
      CHECK(other[i].tau == base[i].tau);
    }
  }
}

TEST_CASE("local values agree with the saturation route") {
  CLArrangement A = named::two_conics_four_lines_tangent();
  for (const auto& c : singular_clusters(A)) {
    Polynomial f = c.chart.affine(A.F());
    Ideal I(Ring::xy(), {f.derivative(0), f.derivative(1), f});
    CHECK(local_multiplicity(I, c.prime) == local_multiplicity_by_saturation(I, c.prime));
  }
}

TEST_CASE("affine jacobian ideal") {
  for (const CLArrangement& A : {named::pencil_and_conic(), named::two_conics_four_lines_tangent(), named::tangent_nonfree()})
    for (const auto& c : singular_clusters(A)) {
      Polynomial f = c.chart.affine(A.F());
      Ideal direct(Ring::xy(), {f, f.derivative(0), f.derivative(1)});
      Ideal fast = affine_jacobian_ideal(A.F(), c.chart);
      CHECK(fast == direct);
      CHECK(local_multiplicity(fast, c.prime) == tjurina(A, c) * c.residue_degree);
    }
  // a chart from a line that is not a coordinate
  CLArrangement B = named::braid_and_conic();
  Chart ch = Chart::from_line(P("x+2y+3z"));
  Polynomial f = ch.affine(B.F());
  CHECK(affine_jacobian_ideal(B.F(), ch) == Ideal(Ring::xy(), {f, f.derivative(0), f.derivative(1)}));
}
