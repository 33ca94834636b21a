#include "clfree/freeness.hpp"
#include "clfree/localinv.hpp"
#include "named_arrangements.hpp"
#include "test_support.hpp"

using namespace clfree;
using named::make;

namespace {

Polynomial P(const char* s) { return parse_poly(s, Ring::xyz()); }

std::vector<long> exps(const CLArrangement& A) {
  FreenessVerdict v = freeness_verdict(A);
  return v.free ? v.exponents : std::vector<long>{};
}

Derivation D(const char* a, const char* b, const char* c) { return Derivation{{P(a), P(b), P(c)}}; }

}  // namespace

TEST_CASE("exponents of free arrangements") {
  CHECK(exps(named::two_conics_three_lines()) == std::vector<long>{1, 2, 4});
  CHECK(exps(named::two_conics_four_lines()) == std::vector<long>{1, 2, 5});
  CHECK(exps(named::two_conics_four_lines_tangent()) == std::vector<long>{1, 3, 4});
  CHECK(exps(named::conic_and_triangle()) == std::vector<long>{1, 2, 2});
  CHECK(exps(make({"x", "y", "x+y-z"})) == std::vector<long>{1, 1, 1});
  CHECK(exps(named::braid()) == std::vector<long>{1, 2, 3});
  CHECK(exps(named::tangent_free()) == std::vector<long>{1, 2, 3});
}

TEST_CASE("degenerate arrangements") {
  CHECK(exps(make({"x"})) == std::vector<long>{0, 0, 1});
  CHECK(exps(make({"x", "y"})) == std::vector<long>{0, 1, 1});
  CHECK(exps(make({"x", "y", "x-y"})) == std::vector<long>{0, 1, 2});
  CHECK(exps(make({"x^2+y^2"})) == std::vector<long>{0, 1, 1});
  FreenessVerdict conic = freeness_verdict(make({"y^2-xz"}));
  CHECK(!conic.free);
  CHECK(conic.resolution.steps.at(0).sorted_twists() == std::vector<long>{1, 1, 1});
  CHECK(conic.resolution.steps.at(1).sorted_twists() == std::vector<long>{2});
  CHECK(conic.hilbert.to_string() == "(3t-t^2)/(1-t)^3");
}

TEST_CASE("non-free arrangements") {
  FreenessVerdict v = freeness_verdict(named::tangent_nonfree());
  CHECK(!v.free);
  CHECK(v.exponents.empty());
  REQUIRE(v.resolution.steps.size() == 2);
  CHECK(v.resolution.steps[0].sorted_twists() == std::vector<long>{3, 3, 3});
  CHECK(v.resolution.steps[1].sorted_twists() == std::vector<long>{4});
  CHECK(v.jacobian_shift == 5);
  CHECK(!freeness_verdict(named::braid_and_conic()).free);
}

TEST_CASE("membership of derivations") {
  CLArrangement A = named::two_conics_three_lines();
  CHECK(is_derivation(Derivation::euler(), A));
  CHECK(is_derivation(D("0", "y", "z"), make({"x"})));
  CHECK(is_derivation(D("0", "y", "z"), make({"y"})));
  CHECK(!is_derivation(D("0", "y", "z"), make({"x+y"})));
  for (const auto& g : freeness_verdict(A).generators) {
    CHECK(is_derivation(g, A));
    CHECK(g.apply(A.F()).is_zero());
  }
  // C theta' is a derivation of C' + C
  CLArrangement B = named::two_conics_four_lines();
  Polynomial L = P("x-y");
  for (const auto& g : freeness_verdict(A).generators) {
    Derivation h = g;
    for (auto& c : h.a) c *= L;
    CHECK(is_derivation(h, B));
  }
}

TEST_CASE("saito criterion") {
  for (const CLArrangement& A : {named::conic_and_triangle(), named::two_conics_four_lines(), named::braid()}) {
    FreenessVerdict v = freeness_verdict(A);
    REQUIRE(v.free);
    REQUIRE(v.generators.size() == 2);
    CHECK(saito_check({Derivation::euler(), v.generators[0], v.generators[1]}, A));
    CHECK(!saito_check({Derivation::euler(), Derivation::euler(), v.generators[0]}, A));
  }
  CLArrangement N = named::tangent_nonfree();
  FreenessVerdict n = freeness_verdict(N);
  for (std::size_t i = 0; i < n.generators.size(); ++i)
    for (std::size_t j = i + 1; j < n.generators.size(); ++j)
      CHECK(!saito_check({Derivation::euler(), n.generators[i], n.generators[j]}, N));
  CHECK(!saito_check({Derivation::euler(), D("x", "0", "0"), D("0", "0", "z")}, make({"x", "y", "z", "x-y"})));
}

TEST_CASE("hilbert polynomial of D0") {
  for (const CLArrangement& A : {named::two_conics_three_lines(), named::tangent_nonfree(), named::braid_and_conic(),
                                 make({"y^2-xz"}), make({"x"})}) {
    FreenessVerdict v = freeness_verdict(A);
    long dJ = jacobian_degree(A.F());
    for (long t = 20; t < 24; ++t)
      CHECK(hilbert_polynomial_value(v.hilbert.numerator, t) == derivation_hilbert_polynomial(A.degree(), dJ, t));
    CHECK(v.resolution.hilbert_numerator() == v.hilbert.numerator);
  }
}

TEST_CASE("free conic families") {
  FreenessVerdict a = freeness_verdict(named::circles_with_lines());
  CHECK(a.free);
  CHECK(a.exponents == std::vector<long>{1, 6, 6});
  FreenessVerdict b = freeness_verdict(named::skew_conics_with_lines());
  CHECK(!b.free);
  REQUIRE(b.resolution.steps.size() == 2);
  CHECK(b.resolution.steps[0].sorted_twists() == std::vector<long>{7, 7, 7, 7});
  CHECK(b.resolution.steps[1].sorted_twists() == std::vector<long>{8, 8});
}
