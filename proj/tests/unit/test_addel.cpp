#include "clfree/addel.hpp"
#include "clfree/factor.hpp"
#include "clfree/linalg.hpp"
#include "clfree/localinv.hpp"
#include "named_arrangements.hpp"
#include "test_support.hpp"

using namespace clfree;
using named::make;

namespace {

Polynomial P(const char* s) { return parse_poly(s, Ring::xyz()); }
Polynomial B(const char* s) { return parse_poly(s, Ring::st()); }

Claim free_claim(std::vector<long> e) { return {Status::Free, std::move(e)}; }
const Claim not_free{Status::NotFree, {}};
const Claim unknown{};

std::size_t index_of(const CLArrangement& A, const char* form) {
  Polynomial f = P(form).primitive();
  for (std::size_t i = 0; i < A.size(); ++i)
    if (A.curves()[i].form.primitive() == f || A.curves()[i].form.primitive() == -f) return i;
  FAIL("no curve " << form);
  return 0;
}

std::vector<long> exps(const CLArrangement& A) {
  FreenessVerdict v = freeness_verdict(A);
  return v.free ? v.exponents : std::vector<long>{};
}

}  // namespace

TEST_CASE("restriction counts") {
  CLArrangement A = named::two_conics_four_lines();
  CHECK(make_triple(A, index_of(A, "x-y")).k == 3);
  CLArrangement T = named::two_conics_four_lines_tangent();
  CHECK(make_triple(T, index_of(T, "x-2y")).k == 4);
  CLArrangement BC = named::braid_and_conic();
  CHECK(make_triple(BC, index_of(BC, "xy+7xz+13yz")).k == 7);
  CLArrangement CT = named::conic_and_triangle();
  CHECK(make_triple(CT, 0).k == 3);
  CHECK(make_triple(make({"x", "y"}), 0).k == 1);
  CHECK_THROWS_AS(make_triple(make({"x"}), 0), std::invalid_argument);
  CHECK_THROWS_AS(make_triple(A, 17), std::out_of_range);
  CHECK_THROWS_AS(make_triple(make({"x^2-2y^2", "z"}), 0), std::invalid_argument);
}

TEST_CASE("quasihomogeneous triples") {
  CLArrangement A = named::two_conics_four_lines();
  CHECK(quasihomogeneous_triple(make_triple(A, index_of(A, "x-y"))));
  CLArrangement BC = named::braid_and_conic();
  CHECK(quasihomogeneous_triple(make_triple(BC, index_of(BC, "xy+7xz+13yz"))));
  CLArrangement N = named::tangent_nonfree();
  CHECK(!quasihomogeneous_triple(make_triple(N, index_of(N, "x-13y"))));
}

TEST_CASE("line rule") {
  CHECK(line_rule(free_claim({1, 2, 4}), Side::Deleted, 3) == free_claim({1, 2, 5}));
  CHECK(line_rule(free_claim({1, 2, 5}), Side::Full, 3) == free_claim({1, 2, 4}));
  // the leftover exponent need not be the largest one
  CHECK(line_rule(free_claim({1, 2, 4}), Side::Deleted, 5) == free_claim({1, 3, 4}));
  CHECK(line_rule(free_claim({1, 3, 4}), Side::Full, 5) == free_claim({1, 2, 4}));
  CHECK(line_rule(free_claim({1, 2, 4}), Side::Deleted, 4) == unknown);
  CHECK(line_rule(not_free, Side::Deleted, 3) == unknown);
  CHECK(line_rule(free_claim({1, 1, 1}), Side::Deleted, 2) == free_claim({1, 1, 2}));
}

TEST_CASE("conic rule") {
  // even k = 2m
  CHECK(conic_rule(free_claim({1, 2, 3}), Side::Deleted, 4) == free_claim({1, 2, 5}));
  CHECK(conic_rule(free_claim({1, 2, 5}), Side::Full, 4) == free_claim({1, 2, 3}));
  CHECK(conic_rule(free_claim({1, 2, 3}), Side::Deleted, 6) == free_claim({1, 3, 4}));
  CHECK(conic_rule(free_claim({1, 2, 3}), Side::Deleted, 8) == unknown);
  // odd k = 2m + 1
  CHECK(conic_rule(free_claim({1, 1, 1}), Side::Deleted, 3) == free_claim({1, 2, 2}));
  CHECK(conic_rule(free_claim({1, 2, 2}), Side::Full, 3) == free_claim({1, 1, 1}));
  CHECK(conic_rule(free_claim({1, 2, 3}), Side::Deleted, 7) == not_free);
  CHECK(conic_rule(free_claim({1, 4, 3}), Side::Full, 7) == not_free);
  CHECK(conic_rule(free_claim({1, 2, 3}), Side::Deleted, 9) == unknown);
  CHECK(conic_rule(not_free, Side::Full, 5) == unknown);
}

TEST_CASE("inference against direct verdicts") {
  CLArrangement A = named::two_conics_four_lines();
  Triple T = make_triple(A, index_of(A, "x-y"));
  CHECK(infer_line(T, Claim::from(freeness_verdict(T.deleted)), Side::Deleted) == Claim::from(freeness_verdict(A)));
  CHECK(infer_line(T, Claim::from(freeness_verdict(A)), Side::Full) == Claim::from(freeness_verdict(T.deleted)));
  CHECK(infer_conic(T, free_claim({1, 2, 4}), Side::Deleted) == unknown);

  CLArrangement CT = named::conic_and_triangle();
  Triple U = make_triple(CT, 0);
  CHECK(infer_conic(U, free_claim({1, 1, 1}), Side::Deleted) == free_claim({1, 2, 2}));
  CHECK(exps(CT) == std::vector<long>{1, 2, 2});

  CLArrangement BC = named::braid_and_conic();
  Triple V = make_triple(BC, index_of(BC, "xy+7xz+13yz"));
  CHECK(infer_conic(V, Claim::from(freeness_verdict(V.deleted)), Side::Deleted) == not_free);
  CHECK(!freeness_verdict(BC).free);

  // non quasihomogeneous triples give nothing
  CLArrangement N = named::tangent_nonfree();
  Triple W = make_triple(N, index_of(N, "x-13y"));
  CHECK(!quasihomogeneous_triple(W));
  CHECK(infer_line(W, Claim::from(freeness_verdict(W.deleted)), Side::Deleted) == unknown);
}

TEST_CASE("certificates") {
  for (const CLArrangement& A : {named::two_conics_four_lines(), named::conic_and_triangle(), named::braid(),
                                 named::braid_and_conic(), named::two_conics_five_lines(3)}) {
    FreenessCertificate c = certify(A);
    CAPTURE(A.to_string());
    REQUIRE(!c.chain.empty());
    CHECK(c.chain.front().rule == "direct");
    CHECK(c.claim().status != Status::Inconclusive);
    CHECK(c.consistent());
    CHECK(c.transcript().find("direct check") != std::string::npos);
  }
  FreenessCertificate five = certify(named::two_conics_five_lines(3));
  CHECK(five.claim() == free_claim({1, 3, 5}));
  CHECK(five.chain.size() > 1);
  FreenessCertificate bc = certify(named::braid_and_conic());
  CHECK(bc.claim() == not_free);
  CHECK(bc.chain.back().rule == "conic-odd");
  // not quasihomogeneous: straight to the direct computation
  FreenessCertificate n = certify(named::tangent_nonfree());
  CHECK(n.chain.size() == 1);
  CHECK(n.claim() == not_free);
  CHECK(!certify(named::braid(), false).direct);
}

TEST_CASE("multirestriction") {
  CLArrangement C = named::two_conics_three_lines();
  for (const char* l : {"x", "y", "x+y-z"}) {
    Multiarrangement2 M = multirestrict(C, index_of(C, l));
    CHECK(M.multiplicities() == std::vector<long>{3, 3});
    CHECK(M.total_multiplicity() == 6);
    CHECK(multi_exponents(M) == std::vector<long>{3, 3});
  }
  CLArrangement harmonic = named::two_conics_five_lines(-1);
  Multiarrangement2 H = multirestrict(harmonic, index_of(harmonic, "x+y-z"));
  CHECK(H.multiplicities() == std::vector<long>{3, 3, 1, 1});
  CHECK(multi_exponents(H) == std::vector<long>{3, 5});
  CLArrangement generic = named::two_conics_five_lines(3);
  CHECK(multi_exponents(multirestrict(generic, index_of(generic, "x+y-z"))) == std::vector<long>{4, 4});
  CHECK_THROWS_AS(multirestrict(C, 0), std::invalid_argument);
}

TEST_CASE("multiarrangement exponents") {
  auto M = [](std::vector<std::pair<const char*, long>> pts) {
    Multiarrangement2 m;
    for (auto& [f, k] : pts) m.points.push_back({B(f), k});
    return multi_exponents(m);
  };
  CHECK(M({{"s", 3}}) == std::vector<long>{0, 3});
  CHECK(M({{"s", 1}, {"t", 1}}) == std::vector<long>{1, 1});
  CHECK(M({{"s", 3}, {"t", 3}, {"s-t", 1}, {"s+t", 1}}) == std::vector<long>{3, 5});
  CHECK(M({{"s", 3}, {"t", 3}, {"s-t", 1}, {"3s-t", 1}}) == std::vector<long>{4, 4});
  // simple arrangements: {1, n-1}
  CHECK(M({{"s", 1}, {"t", 1}, {"s-t", 1}, {"s-2t", 1}, {"s-5t", 1}}) == std::vector<long>{1, 4});
  // conjugate points
  CHECK(M({{"s^2+t^2", 1}}) == std::vector<long>{1, 1});
  CHECK(M({{"s^2+t^2", 2}, {"s", 1}}) == std::vector<long>{2, 3});
  CHECK(M({{"s^2+t^2", 2}, {"s", 1}}) == M({{"s^2+t^2", 2}, {"t", 1}}));
}

TEST_CASE("restricted derivations") {
  CLArrangement A = named::two_conics_four_lines();
  Triple T = make_triple(A, index_of(A, "x-y"));
  RestrictedDerivation e = restrict_derivation(Derivation::euler(), T);
  CHECK(e.kind == CurveKind::Line);
  CHECK(e.tangent());
  CHECK(distinct_root_count(e.restricted) == 3);
  CHECK(e.first == Polynomial::variable(Ring::yz(), 0));
  CHECK(e.second == Polynomial::variable(Ring::yz(), 1));
  for (const auto& g : freeness_verdict(A).generators) CHECK(restrict_derivation(g, T).tangent());
  // the curve times a derivation of A' restricts to zero
  for (const auto& g : freeness_verdict(T.deleted).generators) {
    Derivation h = g;
    for (auto& c : h.a) c *= T.curve().form;
    RestrictedDerivation r = restrict_derivation(h, T);
    CHECK(r.first.is_zero());
    CHECK(r.second.is_zero());
  }
  CHECK_THROWS_AS(restrict_derivation(Derivation{{P("1"), P("0"), P("0")}}, T), std::invalid_argument);

  CLArrangement CT = named::conic_and_triangle();
  Triple U = make_triple(CT, 0);
  RestrictedDerivation c = restrict_derivation(Derivation::euler(), U);
  CHECK(c.kind == CurveKind::Conic);
  CHECK(c.tangent());
  CHECK(distinct_root_count(c.restricted) == 3);
  CHECK(c.first.primitive() == B("s"));
  CHECK(c.second.primitive() == B("t"));
  for (const auto& g : freeness_verdict(CT).generators) CHECK(restrict_derivation(g, U).tangent());
  for (const auto& g : freeness_verdict(U.deleted).generators) {
    Derivation h = g;
    for (auto& x : h.a) x *= U.curve().form;
    CHECK(restrict_derivation(h, U).first.is_zero());
  }
}

TEST_CASE("conic normalization") {
  for (const char* q : {"y^2-xz", "x^2-xz+2y^2-2yz", "xy+7xz+13yz", "x^2+y^2-z^2", "x^2-xz+5y^2-5yz"}) {
    Polynomial C = P(q);
    auto p = rational_point(C);
    REQUIRE(p);
    CHECK(C.evaluate(*p) == 0);
    Mat3 M = conic_normalization(C, *p);
    CHECK(M.det() != 0);
  }
  CHECK(!rational_point(P("x^2+y^2+z^2")));
}

TEST_CASE("jacobian degree bookkeeping") {
  // deg J - deg J' = 2d - k for a line and 4d - 4 - k for a conic, d + 1 = deg A
  CLArrangement A = named::two_conics_four_lines();
  Triple T = make_triple(A, index_of(A, "x-y"));
  long d = A.degree() - 1;
  CHECK(jacobian_degree(A.F()) - jacobian_degree(T.deleted.F()) == 2 * d - T.k);

  CLArrangement BC = named::braid_and_conic();
  Triple V = make_triple(BC, index_of(BC, "xy+7xz+13yz"));
  long e = BC.degree() - 1;
  CHECK(jacobian_degree(BC.F()) - jacobian_degree(V.deleted.F()) == 4 * e - 4 - V.k);
}
