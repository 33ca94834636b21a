#include "clfree/freeness.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "clfree/linalg.hpp"

namespace clfree {

namespace {

const Ring& S() { return Ring::xyz(); }

bool all_partials_nonzero(const Polynomial& F) {
  for (std::size_t i = 0; i < 3; ++i)
    if (F.derivative(i).is_zero()) return false;
  return true;
}

PresentedModule syzygy_generators(const Polynomial& F) {
  long d = F.degree();
  PresentedModule J(S(), GradedFreeModule{{1 - d}}, {{F.derivative(0)}, {F.derivative(1)}, {F.derivative(2)}});
  return minimal_generators(syzygies(J));
}

// Invertible integer matrices tried, in order, when F is a cone over a
// point (some partial derivative vanishes): a fixed short list, then every
// matrix with entries in [-2, 2].
std::vector<Mat3> coordinate_changes() {
  std::vector<Mat3> out;
  const long rows[][9] = {{1, 1, 1, 1, 2, 3, 1, 3, 6}, {2, 1, 1, 1, 3, 1, 1, 1, 4}, {1, -1, 2, 3, 1, -1, -2, 1, 1}};
  for (const auto& r : rows) {
    Mat3 m;
    for (int i = 0; i < 9; ++i) m.a[i / 3][i % 3] = r[i];
    out.push_back(m);
  }
  return out;
}

std::optional<Mat3> next_change(long& counter) {
  static const std::vector<Mat3> fixed = coordinate_changes();
  while (true) {
    long c = counter++;
    if (c < static_cast<long>(fixed.size())) return fixed[static_cast<std::size_t>(c)];
    c -= static_cast<long>(fixed.size());
    if (c >= 1953125) return std::nullopt;  // 5^9
    Mat3 m;
    for (int i = 0; i < 9; ++i, c /= 5) m.a[i / 3][i % 3] = c % 5 - 2;
    if (m.det() != 0) return m;
  }
}

Integer choose2(const Integer& n) { return n * (n - 1) / 2; }

}  // namespace

Derivation Derivation::euler() {
  Derivation e;
  for (std::size_t i = 0; i < 3; ++i) e.a[i] = Polynomial::variable(S(), i);
  return e;
}

Derivation Derivation::from_vector(const Vector& v) {
  if (v.size() != 3) throw std::invalid_argument("a derivation of the plane has three coefficients");
  Derivation t;
  for (std::size_t i = 0; i < 3; ++i) t.a[i] = v[i];
  return t;
}

bool Derivation::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Polynomial& p) { return p.is_zero(); });
}

int Derivation::degree() const {
  int d = -1;
  for (const auto& p : a) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous() || (d >= 0 && p.degree() != d))
      throw std::invalid_argument("derivation is not homogeneous: " + to_string());
    d = p.degree();
  }
  return d;
}

Polynomial Derivation::apply(const Polynomial& f) const {
  Polynomial r(f.ring());
  for (std::size_t i = 0; i < 3; ++i)
    if (!a[i].is_zero()) r += a[i] * f.derivative(i);
  return r;
}

std::string Derivation::to_string() const {
  static const char* names[] = {"d/dx", "d/dy", "d/dz"};
  std::string s;
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + a[i].to_string() + ")" + names[i];
  }
  return s.empty() ? "0" : s;
}

PresentedModule derivation_module(const Polynomial& F) {
  if (F.ring() != S() || F.is_zero() || F.degree() < 1) throw std::invalid_argument("need a nonconstant form");
  if (all_partials_nonzero(F)) return syzygy_generators(F);
  // F(T X') has no vanishing partial; push the derivations back:
  // theta_i(X) = sum_j T_ij theta'_j(T^-1 X).
  long counter = 0;
  while (auto next = next_change(counter)) {
    const Mat3& T = *next;
    Polynomial G = linear_change(F, T);
    if (!all_partials_nonzero(G)) continue;
    Mat3 Ti = T.inverse();
    std::vector<Vector> gens;
    PresentedModule DG = syzygy_generators(G);
    for (const auto& v : DG.generators()) {
      Vector back(3, Polynomial(S()));
      for (std::size_t j = 0; j < 3; ++j) {
        Polynomial pulled = linear_change(v[j], Ti);
        for (std::size_t i = 0; i < 3; ++i)
          if (T.a[i][j] != 0) back[i] += T.a[i][j] * pulled;
      }
      gens.push_back(std::move(back));
    }
    return PresentedModule(S(), GradedFreeModule{{0, 0, 0}}, std::move(gens));
  }
  throw std::logic_error("no coordinate change separates the partial derivatives of " + F.to_string());
}

PresentedModule derivation_module(const CLArrangement& A) { return derivation_module(A.F()); }

FreenessVerdict freeness_verdict(const Polynomial& F) {
  FreenessVerdict v;
  PresentedModule D0 = derivation_module(F);
  v.resolution = free_resolution(D0);
  v.hilbert = module_hilbert_series(D0);
  for (const auto& g : D0.generators()) v.generators.push_back(Derivation::from_vector(g));
  v.jacobian_shift = F.degree() - 1;
  v.free = v.resolution.steps.size() == 1;
  if (v.free) {
    v.exponents = v.resolution.steps[0].sorted_twists();
    v.exponents.push_back(1);
    std::sort(v.exponents.begin(), v.exponents.end());
    long sum = 0;
    for (long e : v.exponents) sum += e;
    if (v.exponents.size() != 3 || sum != F.degree())
      throw std::logic_error("free derivation module with inconsistent exponents");
  }
  return v;
}

FreenessVerdict freeness_verdict(const CLArrangement& A) { return freeness_verdict(A.F()); }

bool is_derivation(const Derivation& theta, const CLArrangement& A) {
  bool each = true;
  for (const auto& c : A.curves()) {
    Polynomial q(S());
    if (!try_divide(theta.apply(c.form), c.form, q)) each = false;
  }
  Polynomial q(S());
  bool whole = try_divide(theta.apply(A.F()), A.F(), q);
  if (each != whole) throw std::logic_error("derivation test disagrees between F and its factors");
  return each;
}

bool saito_check(const std::array<Derivation, 3>& thetas, const CLArrangement& A) {
  long sum = 0;
  for (const auto& t : thetas) {
    if (t.is_zero()) return false;
    sum += t.degree();
  }
  if (sum != A.degree()) return false;
  for (const auto& t : thetas)
    if (!is_derivation(t, A)) return false;
  const auto& m = thetas;
  Polynomial det = m[0].a[0] * (m[1].a[1] * m[2].a[2] - m[1].a[2] * m[2].a[1]) -
                   m[0].a[1] * (m[1].a[0] * m[2].a[2] - m[1].a[2] * m[2].a[0]) +
                   m[0].a[2] * (m[1].a[0] * m[2].a[1] - m[1].a[1] * m[2].a[0]);
  if (det.is_zero()) return false;
  Polynomial q(S());
  return try_divide(det, A.F(), q) && q.is_constant() && !q.is_zero();
}

Integer derivation_hilbert_polynomial(long deg_F, long jacobian_degree, long t) {
  long d = deg_F - 1;
  return 3 * choose2(Integer(t + 2)) - choose2(Integer(t + 2 + d)) + jacobian_degree;
}

Integer hilbert_polynomial_value(const std::vector<Integer>& numerator, long t) {
  Integer v = 0;
  for (std::size_t i = 0; i < numerator.size(); ++i) v += numerator[i] * choose2(Integer(t - static_cast<long>(i) + 2));
  return v;
}

}  // namespace clfree
