#include "clfree/addel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "clfree/factor.hpp"
#include "clfree/linalg.hpp"
#include "clfree/localinv.hpp"

namespace clfree {

namespace {

const Ring& S() { return Ring::xyz(); }

// Two points spanning the line l = 0.
std::pair<Vec3, Vec3> line_basis(const Polynomial& l) {
  Vec3 c = linear_coefficients(l);
  Matrix m(1, 3);
  for (std::size_t i = 0; i < 3; ++i) m(0, i) = c[i];
  auto k = m.kernel();
  return {{k[0][0], k[0][1], k[0][2]}, {k[1][0], k[1][1], k[1][2]}};
}

// F(s P + t Q) as a binary form in s, t.
Polynomial restrict_to_line(const Polynomial& F, const Vec3& P, const Vec3& Q) {
  const Ring& R = Ring::st();
  Polynomial s = Polynomial::variable(R, 0), t = Polynomial::variable(R, 1);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < 3; ++i) images.push_back(P[i] * s + Q[i] * t);
  return F.substitute(R, images);
}

Rational bilinear(const Mat3& m, const Vec3& a, const Vec3& b) {
  Rational r = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r += a[i] * m.a[i][j] * b[j];
  return r;
}

Rational det_columns(const Vec3& a, const Vec3& b, const Vec3& c) {
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    m.a[i][0] = a[i];
    m.a[i][1] = b[i];
    m.a[i][2] = c[i];
  }
  return m.det();
}

Vec3 unit(int i) {
  Vec3 v{};
  v[i] = 1;
  return v;
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (q < 0) return false;
  Integer n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

// Coefficients a'(X') = N a(N^-1 X') of theta in the coordinates X' = N X.
std::array<Polynomial, 3> transform(const Derivation& theta, const Mat3& N) {
  Mat3 Ni = N.inverse();
  std::array<Polynomial, 3> pulled{linear_change(theta.a[0], Ni), linear_change(theta.a[1], Ni),
                                   linear_change(theta.a[2], Ni)};
  std::array<Polynomial, 3> out{Polynomial(S()), Polynomial(S()), Polynomial(S())};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (N.a[i][j] != 0) out[i] += N.a[i][j] * pulled[j];
  return out;
}

// Invertible N whose first row is the line.
Mat3 line_to_x(const Polynomial& l) {
  Vec3 c = linear_coefficients(l);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Mat3 N;
      for (int k = 0; k < 3; ++k) {
        N.a[0][k] = c[k];
        N.a[1][k] = unit(i)[k];
        N.a[2][k] = unit(j)[k];
      }
      if (N.det() != 0) return N;
    }
  throw std::logic_error("no complement for a line");
}

bool contains_exponent(std::vector<long>& rest, long e) {
  auto it = std::find(rest.begin(), rest.end(), e);
  if (it == rest.end()) return false;
  rest.erase(it);
  return true;
}

// Removes the Euler 1 and `e`, returning the remaining exponent.
std::optional<long> remaining(const Claim& c, long e) {
  if (c.status != Status::Free || c.exponents.size() != 3) return std::nullopt;
  std::vector<long> rest = c.exponents;
  if (!contains_exponent(rest, 1) || !contains_exponent(rest, e)) return std::nullopt;
  return rest[0];
}

Claim free_with(std::vector<long> e) {
  std::sort(e.begin(), e.end());
  return {Status::Free, std::move(e)};
}

std::string exponent_string(const std::vector<long>& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "}";
}

std::string claim_string(const Claim& c) {
  if (c.status == Status::Free) return "free with exponents " + exponent_string(c.exponents);
  return c.status == Status::NotFree ? "not free" : "inconclusive";
}

}  // namespace

std::optional<Vec3> rational_point(const Polynomial& conic) {
  const long H = 8;
  for (long h = 0; h <= H; ++h)
    for (long x = -h; x <= h; ++x)
      for (long y = -h; y <= h; ++y)
        for (long z = 0; z <= h; ++z) {
          if (std::max({std::labs(x), std::labs(y), z}) != h || h == 0) continue;
          if (z == 0 && (y < 0 || (y == 0 && x < 0))) continue;
          std::array<Rational, 3> p{Rational(x), Rational(y), Rational(z)};
          if (conic.evaluate(p) == 0) return p;
        }
  // Lines of small height, looking for rational roots of the restriction.
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      for (long c = -4; c <= 4; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        Vec3 coef{Rational(a), Rational(b), Rational(c)};
        auto [P, Q] = line_basis(linear_form(coef));
        Polynomial q = restrict_to_line(conic, P, Q);
        Rational A = q.coefficient(Monomial::var(0, 2)), B = q.coefficient(Monomial::var(0, 1) * Monomial::var(1, 1)),
                 D = q.coefficient(Monomial::var(1, 2));
        Vec3 p;
        if (A == 0) {
          p = P;
        } else {
          Rational r;
          if (!rational_sqrt(B * B - 4 * A * D, r)) continue;
          Rational s = (-B + r) / (2 * A);
          for (int i = 0; i < 3; ++i) p[i] = s * P[i] + Q[i];
        }
        if (conic.evaluate(p) == 0) return p;
      }
  return std::nullopt;
}

Mat3 conic_normalization(const Polynomial& conic, const Vec3& p) {
  Mat3 C = quadric_matrix(conic);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Vec3 a = unit(i), b = unit(j);
      if (det_columns(p, a, b) == 0) continue;
      // Second intersection of the line through p and s a + t b.
      Rational Ca = bilinear(C, a, a), Cb = bilinear(C, b, b), Cab = bilinear(C, a, b);
      Rational Bpa = bilinear(C, p, a), Bpb = bilinear(C, p, b);
      Vec3 c0, c1, c2;
      for (int k = 0; k < 3; ++k) {
        c0[k] = -Ca * p[k] + 2 * Bpa * a[k];
        c1[k] = -2 * Cab * p[k] + 2 * Bpb * a[k] + 2 * Bpa * b[k];
        c2[k] = -Cb * p[k] + 2 * Bpb * b[k];
      }
      Mat3 M;
      for (int k = 0; k < 3; ++k) {
        M.a[k][0] = c0[k];
        M.a[k][1] = c1[k];
        M.a[k][2] = c2[k];
      }
      if (M.det() == 0) continue;
      Polynomial G = linear_change(conic, M).primitive();
      Polynomial y = Polynomial::variable(S(), 1);
      Polynomial target = (y * y - Polynomial::variable(S(), 0) * Polynomial::variable(S(), 2)).primitive();
      if (G != target) throw std::logic_error("conic normalization failed for " + conic.to_string());
      return M;
    }
  throw std::logic_error("could not normalize the conic");
}

Triple make_triple(const CLArrangement& A, std::size_t i) {
  if (i >= A.size()) throw std::out_of_range("curve index out of range");
  if (A.size() < 2) throw std::invalid_argument("a triple needs at least two curves");
  const Curve& c = A.curves()[i];
  if (c.kind == CurveKind::LinePair) throw std::invalid_argument("cannot delete a line pair: " + c.form.to_string());
  Triple T{A, i, A.without(i), 0, {}};
  for (const auto& cl : singular_clusters(A))
    if (cl.contains(i) && cl.incident.size() >= 2) T.restriction.push_back(cl);
  long from_clusters = 0;
  for (const auto& cl : T.restriction) from_clusters += cl.residue_degree;
  const Polynomial& f = T.deleted.F();
  std::optional<long> k;
  if (c.kind == CurveKind::Line) {
    auto [P, Q] = line_basis(c.form);
    k = distinct_root_count(restrict_to_line(f, P, Q));
  } else if (auto p = rational_point(c.form)) {
    Mat3 M = conic_normalization(c.form, *p);
    k = distinct_root_count(pullback_conic(linear_change(f, M)));
  }
  if (k && *k != from_clusters) throw std::logic_error("restriction count disagrees with the singular clusters");
  T.k = from_clusters;
  return T;
}

bool quasihomogeneous_triple(const Triple& T) {
  return quasihomogeneity(T.deleted).all() && quasihomogeneity(T.full).all();
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Free:
      return "free";
    case Status::NotFree:
      return "not free";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Claim Claim::from(const FreenessVerdict& v) {
  return v.free ? Claim{Status::Free, v.exponents} : Claim{Status::NotFree, {}};
}

Claim line_rule(const Claim& known, Side side, long k) {
  if (side == Side::Deleted) {
    if (auto a = remaining(known, k - 1)) return free_with({1, k - 1, *a + 1});
  } else {
    if (auto b = remaining(known, k - 1); b && *b >= 1) return free_with({1, k - 1, *b - 1});
  }
  return {};
}

Claim conic_rule(const Claim& known, Side side, long k) {
  long m = k / 2;
  if (k % 2 == 0) {
    if (side == Side::Deleted) {
      if (auto a = remaining(known, m)) return free_with({1, m, *a + 2});
    } else {
      if (auto b = remaining(known, m); b && *b >= 2) return free_with({1, m, *b - 2});
    }
    return {};
  }
  if (side == Side::Deleted) {
    if (auto a = remaining(known, m)) {
      if (*a == m) return free_with({1, m + 1, m + 1});
      return {Status::NotFree, {}};
    }
  } else {
    if (auto b = remaining(known, m + 1)) {
      if (*b == m + 1) return free_with({1, m, m});
      return {Status::NotFree, {}};
    }
  }
  return {};
}

Claim infer_line(const Triple& T, const Claim& known, Side side) {
  if (T.curve().kind != CurveKind::Line || !quasihomogeneous_triple(T)) return {};
  return line_rule(known, side, T.k);
}

Claim infer_conic(const Triple& T, const Claim& known, Side side) {
  if (T.curve().kind != CurveKind::Conic || !quasihomogeneous_triple(T)) return {};
  return conic_rule(known, side, T.k);
}

namespace {

class Certifier {
public:
  std::vector<CertificateStep> run(const CLArrangement& A) {
    std::string h = A.hash();
    if (auto it = memo_.find(h); it != memo_.end()) return it->second;
    std::vector<CertificateStep> chain = search(A);
    memo_.emplace(h, chain);
    return chain;
  }

private:
  bool qh(const CLArrangement& A) {
    std::string h = A.hash();
    auto it = qh_.find(h);
    if (it == qh_.end()) it = qh_.emplace(h, quasihomogeneity(A).all()).first;
    return it->second;
  }

  std::vector<CertificateStep> direct(const CLArrangement& A) {
    CertificateStep s{A.hash(), A.to_string(), A.curves(), "direct", "", 0, qh(A), Claim::from(freeness_verdict(A))};
    return {s};
  }

  std::vector<CertificateStep> search(const CLArrangement& A) {
    if (A.size() < 2 || !qh(A)) return direct(A);
    struct Candidate {
      int kind;  // 0 line, 1 conic
      long k;
      std::size_t index;
    };
    std::vector<Candidate> cands;
    std::vector<Triple> triples;
    for (std::size_t i = 0; i < A.size(); ++i) {
      CurveKind kind = A.curves()[i].kind;
      if (kind == CurveKind::LinePair) continue;
      triples.push_back(make_triple(A, i));
      cands.push_back({kind == CurveKind::Line ? 0 : 1, triples.back().k, triples.size() - 1});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      return std::tie(a.kind, a.k) < std::tie(b.kind, b.k);
    });
    for (const auto& c : cands) {
      const Triple& T = triples[c.index];
      if (!qh(T.deleted)) continue;
      std::vector<CertificateStep> sub = run(T.deleted);
      const Claim& known = sub.back().claim;
      Claim next = c.kind == 0 ? line_rule(known, Side::Deleted, T.k) : conic_rule(known, Side::Deleted, T.k);
      if (next.status == Status::Inconclusive) continue;
      std::string rule = c.kind == 0 ? "line" : (T.k % 2 == 0 ? "conic-even" : "conic-odd");
      sub.push_back({A.hash(), A.to_string(), A.curves(), rule, T.curve().form.to_string(), T.k, true, next});
      return sub;
    }
    return direct(A);
  }

  std::map<std::string, std::vector<CertificateStep>> memo_;
  std::map<std::string, bool> qh_;
};

}  // namespace

FreenessCertificate certify(const CLArrangement& A, bool cross_check) {
  FreenessCertificate cert;
  cert.chain = Certifier().run(A);
  if (cross_check) cert.direct = Claim::from(freeness_verdict(A));
  return cert;
}

std::string FreenessCertificate::transcript() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& s = chain[i];
    if (s.rule == "direct")
      os << "base: " << s.arrangement << "\n  computed directly: " << claim_string(s.claim) << "\n";
    else
    {
      os << "add " << s.removed << " (" << s.rule << " rule, k=" << s.k << ", quasihomogeneous triple)\n  "
         << claim_string(s.claim);
      // odd conic obstruction: the deletion is {1,m,a} with a != m
      if (s.rule == "conic-odd" && s.claim.status == Status::NotFree && i > 0)
        if (auto a = remaining(chain[i - 1].claim, s.k / 2))
          os << " (odd k, m=" << s.k / 2 << ", a=" << *a << " != m)";
      os << "\n";
    }
  }
  if (direct) os << "direct check: " << claim_string(*direct) << (consistent() ? " (agrees)" : " (DISAGREES)") << "\n";
  return os.str();
}

long Multiarrangement2::total_multiplicity() const {
  long n = 0;
  for (const auto& p : points) n += p.multiplicity * p.form.degree();
  return n;
}

std::size_t Multiarrangement2::geometric_points() const {
  std::size_t n = 0;
  for (const auto& p : points) n += static_cast<std::size_t>(p.form.degree());
  return n;
}

std::vector<long> Multiarrangement2::multiplicities() const {
  std::vector<long> m;
  for (const auto& p : points)
    for (int i = 0; i < p.form.degree(); ++i) m.push_back(p.multiplicity);
  std::sort(m.rbegin(), m.rend());
  return m;
}

Multiarrangement2 multirestrict(const CLArrangement& A, std::size_t i) {
  if (i >= A.size()) throw std::out_of_range("curve index out of range");
  const Curve& L = A.curves()[i];
  if (L.kind != CurveKind::Line) throw std::invalid_argument("multirestriction needs a line");
  auto [P, Q] = line_basis(L.form);
  Multiarrangement2 M;
  for (std::size_t j = 0; j < A.size(); ++j) {
    if (j == i) continue;
    for (const auto& f : factor_binary_form(restrict_to_line(A.curves()[j].form, P, Q)).factors) {
      auto it = std::find_if(M.points.begin(), M.points.end(), [&](const MultiPoint& p) { return p.form == f.factor; });
      if (it == M.points.end())
        M.points.push_back({f.factor, f.multiplicity});
      else
        it->multiplicity += f.multiplicity;
    }
  }
  return M;
}

namespace {

// Powers w^0..w^n reduced modulo the monic h(w), as coefficient vectors.
std::vector<std::vector<Rational>> powers_mod(const std::vector<Rational>& h, std::size_t n) {
  std::size_t e = h.size() - 1;
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> cur(e);
  cur[0] = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    out.push_back(cur);
    // multiply by w
    std::vector<Rational> next(e);
    for (std::size_t i = 0; i + 1 < e; ++i) next[i + 1] = cur[i];
    Rational top = cur[e - 1];
    for (std::size_t i = 0; i < e; ++i) next[i] -= top * h[i];
    cur = std::move(next);
  }
  return out;
}

Integer binom(long n, long r) {
  if (r < 0 || r > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return b;
}

// dim of {f d/ds + g d/dt of degree k satisfying the multiplicity conditions}.
long solution_dimension(const Multiarrangement2& M, long k) {
  const std::size_t n = static_cast<std::size_t>(k + 1);
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : M.points) {
    const Polynomial& h = p.form;
    long m = p.multiplicity;
    if (h.degree() == 1 && h.coefficient(Monomial::var(0)) == 0) {
      // the point t = 0: t^m divides g
      for (long i = 0; i <= k; ++i)
        if (k - i < m) {
          std::vector<Rational> r(2 * n);
          r[n + static_cast<std::size_t>(i)] = 1;
          rows.push_back(std::move(r));
        }
      continue;
    }
    // h(w, 1), made monic
    std::size_t e = static_cast<std::size_t>(h.degree());
    std::vector<Rational> hc(e + 1);
    for (const auto& t : h.terms()) hc[t.mono.e[0]] += t.coef;
    Rational lead = hc[e];
    for (auto& c : hc) c /= lead;
    auto pw = powers_mod(hc, n + 1);
    for (long r = 0; r < m; ++r) {
      // d^r/ds^r (f - w g)(s = w) = 0 in Q[w]/(h), one row per coordinate.
      std::vector<std::vector<Rational>> block(e, std::vector<Rational>(2 * n));
      for (long i = r; i <= k; ++i) {
        Rational b(binom(i, r));
        const auto& wf = pw[static_cast<std::size_t>(i - r)];
        const auto& wg = pw[static_cast<std::size_t>(i - r + 1)];
        for (std::size_t c = 0; c < e; ++c) {
          block[c][static_cast<std::size_t>(i)] += b * wf[c];
          block[c][n + static_cast<std::size_t>(i)] -= b * wg[c];
        }
      }
      for (auto& row : block) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return static_cast<long>(2 * n);
  Matrix A(rows.size(), 2 * n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) A(i, j) = rows[i][j];
  return static_cast<long>(2 * n - A.rank());
}

}  // namespace

std::vector<long> multi_exponents(const Multiarrangement2& M) {
  if (M.points.empty()) throw std::invalid_argument("empty multiarrangement");
  long total = M.total_multiplicity();
  std::optional<long> d1;
  for (long k = 0; k <= total; ++k) {
    long dim = solution_dimension(M, k);
    if (!d1) {
      if (dim == 0) continue;
      d1 = k;
      if (dim >= 2) return {k, k};
      continue;
    }
    if (dim > k - *d1 + 1) {
      if (*d1 + k != total) throw std::logic_error("multiarrangement exponents do not add up");
      return {*d1, k};
    }
  }
  throw std::logic_error("no second exponent found");
}

bool RestrictedDerivation::tangent() const {
  Polynomial image = first * restricted.derivative(0) + second * restricted.derivative(1);
  Polynomial q(restricted.ring());
  return try_divide(image, restricted, q);
}

RestrictedDerivation restrict_derivation(const Derivation& theta, const Triple& T) {
  if (!is_derivation(theta, T.full)) throw std::invalid_argument("not a derivation of the arrangement");
  const Curve& c = T.curve();
  RestrictedDerivation r;
  r.kind = c.kind;
  if (c.kind == CurveKind::Line) {
    Mat3 N = line_to_x(c.form);
    auto a = transform(theta, N);
    const Ring& R = Ring::yz();
    std::vector<Polynomial> images{Polynomial(R), Polynomial::variable(R, 0), Polynomial::variable(R, 1)};
    r.first = a[1].substitute(R, images);
    r.second = a[2].substitute(R, images);
    r.restricted = squarefree_part(linear_change(T.deleted.F(), N.inverse()).substitute(R, images));
    return r;
  }
  auto p = rational_point(c.form);
  if (!p) throw std::runtime_error("no small rational point on " + c.form.to_string() + "; cannot parametrize");
  Mat3 M = conic_normalization(c.form, *p);
  auto a = transform(theta, M.inverse());
  const Ring& R = Ring::st();
  Polynomial s = Polynomial::variable(R, 0), t = Polynomial::variable(R, 1);
  Polynomial p1 = pullback_conic(a[0]), p2 = pullback_conic(a[1]), p3 = pullback_conic(a[2]);
  r.first = exact_divide(p1, s);
  r.second = exact_divide(p3, t);
  if (2 * p2 != t * r.first + s * r.second) throw std::logic_error("restriction to the conic is inconsistent");
  r.restricted = squarefree_part(pullback_conic(linear_change(T.deleted.F(), M)));
  return r;
}

}  // namespace clfree
