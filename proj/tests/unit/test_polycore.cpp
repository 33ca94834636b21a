#include <random>

#include "clfree/factor.hpp"
#include "clfree/linalg.hpp"
#include "clfree/parse.hpp"
#include "test_support.hpp"

using namespace clfree;

namespace {

Polynomial P(const char* s, const Ring& r = Ring::xyz()) { return parse_poly(s, r); }

Polynomial random_poly(std::mt19937_64& rng, const Ring& r, int max_deg, int terms) {
  std::vector<Polynomial::Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    int budget = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    for (std::size_t v = 0; v < r.arity() && budget > 0; ++v) {
      int e = static_cast<int>(rng() % static_cast<unsigned>(budget + 1));
      m.e[v] = static_cast<std::uint32_t>(e);
      budget -= e;
    }
    ts.push_back({m, Rational(static_cast<long>(rng() % 11) - 5, static_cast<unsigned long>(rng() % 3 + 1))});
  }
  return Polynomial::from_terms(r, ts);
}

}  // namespace

TEST_CASE("parse quadric and zero") {
  Polynomial q = P("x^2-xz+5y^2-5yz");
  CHECK(q.size() == 4);
  CHECK(q.is_homogeneous());
  CHECK(q.degree() == 2);
  Polynomial z = P("0");
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
}

TEST_CASE("parse expands shifted circle") {
  CHECK(P("(x-3z)^2+(y-4z)^2-25z^2") == P("x^2+y^2-6xz-8yz"));
  CHECK(P("3/4*x - 1/2*y") == P("x*3/4-y/2"));
}

TEST_CASE("parse errors carry offsets") {
  CHECK_THROWS_AS(P("x+w"), ParseError);
  try {
    P("x+w");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(P("x/0"), ParseError);
  CHECK_THROWS_AS(P("x/y"), ParseError);
  CHECK_THROWS_AS(P("x(y+z)"), ParseError);
  CHECK_THROWS_AS(P("2(x+y)"), ParseError);
  CHECK_THROWS_AS(P("x+"), ParseError);
  CHECK_THROWS_AS(P("(x"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Polynomial f = random_poly(rng, Ring::xyz(), 5, 6);
    CHECK(P(f.to_string().c_str()) == f);
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Polynomial a = random_poly(rng, Ring::xyz(), 3, 4);
    Polynomial b = random_poly(rng, Ring::xyz(), 3, 4);
    Polynomial c = random_poly(rng, Ring::xyz(), 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial(Ring::xyz()));
  }
}

TEST_CASE("partial derivatives and Euler identity") {
  CHECK(P("y^2-xz").derivative(1) == P("2y"));
  CHECK(P("7").derivative(0).is_zero());
  Polynomial F = P("xy*(x-y)*(x-2y)*(x^2-xz+y^2-yz)");
  CHECK(F.degree() == 6);
  Polynomial euler = P("x") * F.derivative(0) + P("y") * F.derivative(1) + P("z") * F.derivative(2);
  CHECK(euler == Rational(6) * F);
}

TEST_CASE("dehomogenize") {
  CHECK(dehomogenize(P("y^2-xz"), P("z")).f == P("y^2-x", Ring::xy()));
  CHECK(dehomogenize(P("z^3"), P("z")).f == P("1", Ring::xy()));
  Polynomial F = P("xy*(x-y)*(x-2y)*(x^2-xz+y^2-yz)");
  CHECK(dehomogenize(F, P("z")).f == P("xy*(x-y)*(x-2y)*(x^2-x+y^2-y)", Ring::xy()));
  CHECK_THROWS(dehomogenize(F, P("x^2")));
  // A line that is not a coordinate: the recorded change sends it to z.
  auto d = dehomogenize(P("x+y-z"), P("x+y-z"));
  CHECK(d.f == P("1", Ring::xy()));
  Vec3 on_line{1, 0, 1};
  CHECK((d.to_new * on_line)[2] == 0);
}

TEST_CASE("pullback along the conic parametrization") {
  const Ring& st = Ring::st();
  CHECK(pullback_conic(P("y^2-xz")).is_zero());
  CHECK(pullback_conic(P("2x+3y+5z")) == P("2s^2+3st+5t^2", st));
  CHECK(pullback_conic(P("x")) == P("s^2", st));
  std::mt19937_64 rng(3);
  Polynomial C = P("y^2-xz");
  for (int i = 0; i < 30; ++i) {
    Polynomial f = random_poly(rng, Ring::xyz(), 3, 4);
    Polynomial g = random_poly(rng, Ring::xyz(), 3, 4);
    CHECK(pullback_conic(f * g) == pullback_conic(f) * pullback_conic(g));
    CHECK(pullback_conic(C * f).is_zero());
    // Non-multiples survive unless the remainder vanishes: x^n never does.
    CHECK(!pullback_conic(C * f + P("x^3")).is_zero());
  }
}

TEST_CASE("univariate factorization") {
  const Ring& xy = Ring::xy();
  auto fx = factor_univariate(P("x^4-1", xy));
  REQUIRE(fx.factors.size() == 3);
  CHECK(fx.factors[0].factor == P("x+1", xy));
  CHECK(fx.factors[1].factor == P("x-1", xy));
  CHECK(fx.factors[2].factor == P("x^2+1", xy));
  auto cube = factor_univariate(P("(x-2)^3", xy));
  REQUIRE(cube.factors.size() == 1);
  CHECK(cube.factors[0].multiplicity == 3);
  CHECK(cube.factors[0].factor == P("x-2", xy));
  CHECK_THROWS_AS(factor_univariate(Polynomial(xy)), std::domain_error);
  CHECK_THROWS(factor_univariate(P("xy", xy)));
}

TEST_CASE("factorization recombines modular factors") {
  const Ring& xy = Ring::xy();
  // x^4+1 is irreducible over Q but splits modulo every prime.
  CHECK(factor_univariate(P("x^4+1", xy)).factors.size() == 1);
  // Swinnerton-Dyer style product of two quartics.
  Polynomial f = P("(x^4-10x^2+1)*(x^4+1)*(3x^2-2)^2*(x-1/2)", xy);
  auto fs = factor_univariate(f);
  CHECK(fs.expand(xy) == f);
  CHECK(fs.factors.size() == 4);
  Polynomial g = P("y^6-2y^5+y^3-7y+11", xy);
  CHECK(factor_univariate(g).factors.size() == 1);
  CHECK(factor_univariate(g * g.derivative(1)).expand(xy) == g * g.derivative(1));
}

TEST_CASE("factorization re-expands on random inputs") {
  const Ring& xy = Ring::xy();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    Polynomial f = Polynomial::constant(xy, Rational(static_cast<long>(rng() % 7) + 1, 3));
    int parts = static_cast<int>(rng() % 3) + 1;
    for (int j = 0; j < parts; ++j) {
      Polynomial q = Polynomial::constant(xy, 0);
      int d = static_cast<int>(rng() % 4) + 1;
      for (int e = 0; e <= d; ++e)
        q += Polynomial::monomial(xy, Monomial::var(0, static_cast<std::uint32_t>(e)),
                                  Rational(static_cast<long>(rng() % 9) - 4 + (e == d ? 10 : 0)));
      f *= q.pow(static_cast<unsigned>(rng() % 2 + 1));
    }
    auto fs = factor_univariate(f);
    CHECK(fs.expand(xy) == f);
    for (const auto& fac : fs.factors) CHECK(fac.factor.leading_term().coef == 1);
  }
}

TEST_CASE("binary forms") {
  const Ring& st = Ring::st();
  auto f = factor_binary_form(P("s^2t-st^2", st));
  REQUIRE(f.factors.size() == 3);
  CHECK(f.expand(st) == P("s^2t-st^2", st));
  CHECK(distinct_root_count(P("s^2t-st^2", st)) == 3);
  CHECK(distinct_root_count(P("t^4", st)) == 1);
  CHECK(distinct_root_count(P("s^3t^2*(s^2+t^2)", st)) == 4);
  CHECK(squarefree_part(P("s^3t^2", st)) == P("st", st));
}

TEST_CASE("matrix kernel and inverse") {
  Mat3 m;
  m.a = {{{1, 2, 3}, {0, 1, 4}, {5, 6, 0}}};
  CHECK(m * m.inverse() == Mat3::identity());
  CHECK(m.det() == 1);
  Matrix a(2, 3);
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(1, 1) = 1;
  a(1, 2) = 1;
  auto k = a.kernel();
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == 1);
  CHECK(k[0][1] == -1);
  CHECK(k[0][2] == 1);
  CHECK(quadric_matrix(P("y^2-xz")).det() == Rational(-1, 4));
}
