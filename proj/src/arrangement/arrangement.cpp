#include "clfree/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace clfree {

namespace {

using cd = std::complex<double>;

// Rank of a 3x3 rational matrix.
std::size_t rank3(const Mat3& m) {
  Matrix x(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) x(i, j) = m.a[i][j];
  return x.rank();
}

Vec3 kernel_vector(const Mat3& m) {
  Matrix x(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) x(i, j) = m.a[i][j];
  auto k = x.kernel();
  if (k.size() != 1) throw std::logic_error("expected a one-dimensional kernel");
  return {k[0][0], k[0][1], k[0][2]};
}

Rational bilinear(const Mat3& m, const Vec3& a, const Vec3& b) {
  Rational s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a[i] * m.a[i][j] * b[j];
  return s;
}

Vec3 unit(int i) {
  Vec3 v{};
  v[i] = 1;
  return v;
}

Rational det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  Mat3 m;
  for (int j = 0; j < 3; ++j) {
    m.a[0][j] = a[j];
    m.a[1][j] = b[j];
    m.a[2][j] = c[j];
  }
  return m.det();
}

bool rational_square(const Rational& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

// Data of a line pair: vertex v and points a + t b on the two lines, where
// Q(a + t b) = qa + 2 t qab + t^2 qb.
struct PairData {
  Vec3 v, a, b;
  Rational qa, qab, qb;
};

PairData pair_data(const Polynomial& q) {
  Mat3 m = quadric_matrix(q);
  PairData d;
  d.v = kernel_vector(m);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (det3(d.v, unit(i), unit(j)) != 0) {
        d.a = unit(i);
        d.b = unit(j);
        d.qa = bilinear(m, d.a, d.a);
        d.qab = bilinear(m, d.a, d.b);
        d.qb = bilinear(m, d.b, d.b);
        return d;
      }
  throw std::logic_error("no line avoiding the vertex");
}

bool pair_splits_over_q(const Polynomial& q) {
  PairData d = pair_data(q);
  if (d.qb == 0) return true;
  return rational_square(d.qab * d.qab - d.qa * d.qb);
}

// Coefficient vectors of the two geometric lines of a pair, in a fixed order.
std::array<std::array<cd, 3>, 2> pair_lines(const Polynomial& q) {
  PairData d = pair_data(q);
  double A = d.qb.get_d(), B = d.qab.get_d(), C = d.qa.get_d();
  cd disc = std::sqrt(cd(B * B - A * C));
  std::array<cd, 2> t{(-B + disc) / A, (-B - disc) / A};
  std::array<std::array<cd, 3>, 2> out;
  for (int k = 0; k < 2; ++k) {
    std::array<cd, 3> w, v;
    for (int i = 0; i < 3; ++i) {
      w[i] = d.a[i].get_d() + t[k] * d.b[i].get_d();
      v[i] = d.v[i].get_d();
    }
    out[k] = {v[1] * w[2] - v[2] * w[1], v[2] * w[0] - v[0] * w[2], v[0] * w[1] - v[1] * w[0]};
  }
  auto key = [](const std::array<cd, 3>& l) {
    std::size_t p = 0;
    for (std::size_t i = 0; i < 3; ++i)
      if (std::abs(l[i]) > std::abs(l[p])) p = i;
    std::array<double, 6> k{};
    for (std::size_t i = 0; i < 3; ++i) {
      cd c = l[i] / l[p];
      k[2 * i] = c.real();
      k[2 * i + 1] = c.imag();
    }
    return k;
  };
  if (key(out[1]) < key(out[0])) std::swap(out[0], out[1]);
  return out;
}

std::string fnv_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace

std::string kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::Line:
      return "line";
    case CurveKind::Conic:
      return "conic";
    case CurveKind::LinePair:
      return "line_pair";
  }
  return "?";
}

CurveKind parse_kind(const std::string& s) {
  if (s == "line") return CurveKind::Line;
  if (s == "conic") return CurveKind::Conic;
  if (s == "line_pair") return CurveKind::LinePair;
  throw ValidationError("unknown curve kind '" + s + "'");
}

CLArrangement CLArrangement::build(std::vector<Curve> curves) {
  if (curves.empty()) throw ValidationError("arrangement has no curves");
  CLArrangement A;
  for (auto& c : curves) {
    const Polynomial& f = c.form;
    if (f.ring() != Ring::xyz()) throw ValidationError("curve not in x, y, z: " + f.to_string());
    if (f.is_zero()) throw ValidationError("zero form");
    if (!f.is_homogeneous()) throw ValidationError("form is not homogeneous: " + f.to_string());
    if (f.degree() != c.degree())
      throw ValidationError(kind_name(c.kind) + " of degree " + std::to_string(f.degree()) + ": " + f.to_string());
    if (c.kind != CurveKind::Line) {
      Mat3 m = quadric_matrix(f);
      if (c.kind == CurveKind::Conic && m.det() == 0) throw ValidationError("singular conic: " + f.to_string());
      if (c.kind == CurveKind::LinePair) {
        if (rank3(m) != 2) throw ValidationError("line pair must have rank 2: " + f.to_string());
        if (pair_splits_over_q(f)) throw ValidationError("line pair splits over Q; give the two lines: " + f.to_string());
      }
    }
    c.form = f.primitive();
  }
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (curves[i].form == curves[j].form)
        throw ValidationError("repeated component: " + curves[i].form.to_string());
  A.curves_ = std::move(curves);
  A.F_ = Polynomial::constant(Ring::xyz(), 1);
  for (const auto& c : A.curves_) A.F_ *= c.form;
  return A;
}

CLArrangement CLArrangement::from_forms(const std::vector<Polynomial>& forms) {
  std::vector<Curve> curves;
  for (const auto& f : forms) {
    CurveKind k = CurveKind::Line;
    if (f.degree() == 2) k = quadric_matrix(f).det() != 0 ? CurveKind::Conic : CurveKind::LinePair;
    curves.push_back({k, f});
  }
  return build(std::move(curves));
}

std::size_t CLArrangement::geometric_size() const {
  std::size_t n = 0;
  for (const auto& c : curves_) n += static_cast<std::size_t>(c.components());
  return n;
}

bool CLArrangement::lines_only() const {
  return std::all_of(curves_.begin(), curves_.end(), [](const Curve& c) { return c.kind != CurveKind::Conic; });
}

CLArrangement CLArrangement::without(std::size_t i) const {
  if (i >= curves_.size()) throw std::out_of_range("curve index out of range");
  std::vector<Curve> c = curves_;
  c.erase(c.begin() + static_cast<long>(i));
  return build(std::move(c));
}

CLArrangement CLArrangement::with(const Curve& extra) const {
  std::vector<Curve> c = curves_;
  c.push_back(extra);
  return build(std::move(c));
}

CLArrangement CLArrangement::transformed(const Mat3& T) const {
  std::vector<Curve> c = curves_;
  for (auto& curve : c) curve.form = linear_change(curve.form, T);
  return build(std::move(c));
}

std::string CLArrangement::hash() const {
  std::vector<std::string> parts;
  for (const auto& c : curves_) parts.push_back(kind_name(c.kind) + ":" + c.form.to_string());
  std::sort(parts.begin(), parts.end());
  std::string all;
  for (const auto& p : parts) all += p + ";";
  return fnv_hex(all);
}

std::string CLArrangement::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (i) s += "; ";
    s += kind_name(curves_[i].kind) + " " + curves_[i].form.to_string();
  }
  return s;
}

Chart Chart::coordinate(int which) {
  static const char* names[] = {"z", "y", "x"};
  return from_line(Polynomial::variable(Ring::xyz(), names[which]));
}

Chart Chart::from_line(const Polynomial& line) {
  Dehomogenized d = dehomogenize(line, line);
  return {d.to_new, line};
}

Polynomial Chart::affine(const Polynomial& form) const { return dehomogenize(form, line).f; }

namespace {

// Projective point from chart coordinates (x', y').
Vec3 to_projective(const Chart& ch, const Rational& a, const Rational& b) {
  return ch.to_new.inverse() * Vec3{a, b, Rational(1)};
}

std::array<Rational, 3> normalize(std::array<Rational, 3> p) {
  int k = p[2] != 0 ? 2 : (p[0] != 0 ? 0 : 1);
  Rational s = p[k];
  for (auto& c : p) c /= s;
  return p;
}

std::string point_label(const std::array<Rational, 3>& p) {
  return "(" + to_string(p[0]) + ":" + to_string(p[1]) + ":" + to_string(p[2]) + ")";
}

// Form in x, y, z vanishing on the chart points where g(x', y') = 0.
Polynomial homogenize_in_chart(const Chart& ch, const Polynomial& g) {
  const Ring& S = Ring::xyz();
  int d = g.degree();
  std::vector<Polynomial::Term> terms;
  for (const auto& t : g.terms()) {
    Monomial m;
    m.e[0] = t.mono.e[0];
    m.e[1] = t.mono.e[1];
    m.e[2] = static_cast<std::uint32_t>(d - t.mono.degree());
    terms.push_back({m, t.coef});
  }
  return linear_change(Polynomial::from_terms(S, std::move(terms)), ch.to_new).primitive();
}

std::string cluster_label(const SingularCluster& c, const std::vector<Polynomial>& constraints) {
  if (auto p = c.point()) return point_label(*p);
  std::vector<std::string> gens;
  for (const auto& l : constraints) gens.push_back(l.primitive().to_string());
  for (const auto& g : c.prime.basis()) {
    std::string s = homogenize_in_chart(c.chart, g).to_string();
    if (std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  std::string out = "V(";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + gens[i];
  return out + ")";
}

std::optional<std::array<Rational, 3>> vertex_of(const Curve& c) {
  if (c.kind != CurveKind::LinePair) return std::nullopt;
  Vec3 v = pair_data(c.form).v;
  return normalize(v);
}

}  // namespace

std::optional<std::array<Rational, 3>> SingularCluster::point() const {
  if (residue_degree != 1) return std::nullopt;
  ResiduePoint rp = residue_point(prime);
  return normalize(to_projective(chart, rp.coords[0][0], rp.coords[1][0]));
}

bool SingularCluster::contains(std::size_t curve) const {
  return std::binary_search(incident.begin(), incident.end(), curve);
}

std::vector<SingularCluster> singular_clusters(const CLArrangement& A) {
  const Ring& R = Ring::xy();
  const auto& curves = A.curves();
  std::vector<SingularCluster> out;
  std::vector<Polynomial> previous_lines;
  for (int which = 0; which < 3; ++which) {
    Chart ch = Chart::coordinate(which);
    std::vector<Polynomial> constraints;
    for (const auto& l : previous_lines) constraints.push_back(ch.affine(l));
    std::vector<Polynomial> aff;
    for (const auto& c : curves) aff.push_back(ch.affine(c.form));
    std::vector<SingularCluster> found;
    auto cluster_for = [&](const Ideal& P) -> SingularCluster& {
      for (auto& c : found)
        if (c.prime == P) return c;
      SingularCluster c;
      c.chart = ch;
      c.prime = P;
      c.residue_degree = static_cast<int>(P.colength());
      found.push_back(std::move(c));
      return found.back();
    };
    for (std::size_t i = 0; i < curves.size(); ++i)
      for (std::size_t j = i + 1; j < curves.size(); ++j) {
        std::vector<Polynomial> gens{aff[i], aff[j]};
        gens.insert(gens.end(), constraints.begin(), constraints.end());
        Ideal I(R, gens);
        if (I.is_unit()) continue;
        Ideal local(R, {aff[i], aff[j]});
        for (const Ideal& P : prime_decomposition_zero_dim(I)) {
          SingularCluster& c = cluster_for(P);
          long m = local_multiplicity(local, P);
          if (m % c.residue_degree != 0) throw std::logic_error("intersection number not divisible by the residue degree");
          c.intersections[{i, j}] = m / c.residue_degree;
          c.incident.push_back(i);
          c.incident.push_back(j);
        }
      }
    // Vertices of line pairs are nodes of the pair itself.
    for (std::size_t k = 0; k < curves.size(); ++k) {
      auto v = vertex_of(curves[k]);
      if (!v) continue;
      Vec3 w = ch.to_new * Vec3{(*v)[0], (*v)[1], (*v)[2]};
      if (w[2] == 0) continue;
      bool earlier = false;
      for (const auto& l : previous_lines) {
        Vec3 c = linear_coefficients(l);
        if (c[0] * (*v)[0] + c[1] * (*v)[1] + c[2] * (*v)[2] != 0) earlier = true;
      }
      if (earlier) continue;
      Ideal P(R, {Polynomial::variable(R, 0) - Polynomial::constant(R, w[0] / w[2]),
                  Polynomial::variable(R, 1) - Polynomial::constant(R, w[1] / w[2])});
      cluster_for(P).incident.push_back(k);
    }
    for (auto& c : found) {
      std::sort(c.incident.begin(), c.incident.end());
      c.incident.erase(std::unique(c.incident.begin(), c.incident.end()), c.incident.end());
      auto pt = c.point();
      c.branches = 0;
      for (std::size_t k : c.incident) {
        auto v = vertex_of(curves[k]);
        c.branches += (v && pt && *v == *pt) ? 2 : 1;
      }
      c.label = cluster_label(c, previous_lines);
    }
    std::sort(found.begin(), found.end(), [](const SingularCluster& a, const SingularCluster& b) {
      if (a.residue_degree != b.residue_degree) return a.residue_degree < b.residue_degree;
      return a.label < b.label;
    });
    for (auto& c : found) out.push_back(std::move(c));
    previous_lines.push_back(ch.line);
  }
  return out;
}

std::optional<std::size_t> find_cluster(const std::vector<SingularCluster>& clusters, const std::array<Rational, 3>& p) {
  auto q = normalize(p);
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    auto c = clusters[i].point();
    if (c && *c == q) return i;
  }
  return std::nullopt;
}

namespace {

// Roots of a monic polynomial with rational coefficients (increasing degree).
std::vector<cd> complex_roots(const std::vector<Rational>& monic) {
  std::size_t d = monic.size() - 1;
  std::vector<cd> c(monic.size());
  for (std::size_t i = 0; i <= d; ++i) c[i] = monic[i].get_d();
  auto eval = [&](cd x) {
    cd v = 0;
    for (std::size_t i = d + 1; i-- > 0;) v = v * x + c[i];
    return v;
  };
  auto deriv = [&](cd x) {
    cd v = 0;
    for (std::size_t i = d; i >= 1; --i) v = v * x + static_cast<double>(i) * c[i];
    return v;
  };
  if (d == 1) return {-c[0]};
  // Durand-Kerner from the usual spiral start, then Newton polishing.
  double bound = 1;
  for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, 1 + std::abs(c[i]));
  std::vector<cd> z(d);
  for (std::size_t k = 0; k < d; ++k) z[k] = std::polar(0.5 * bound, 0.4 + 2 * M_PI * static_cast<double>(k) / static_cast<double>(d));
  for (int it = 0; it < 2000; ++it) {
    double change = 0;
    for (std::size_t k = 0; k < d; ++k) {
      cd den = 1;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) den *= z[k] - z[j];
      cd step = eval(z[k]) / den;
      z[k] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15 * bound) break;
  }
  for (auto& r : z)
    for (int it = 0; it < 3; ++it) {
      cd dv = deriv(r);
      if (std::abs(dv) == 0) break;
      r -= eval(r) / dv;
    }
  return z;
}

cd eval_in(const std::vector<Rational>& coeffs, cd u) {
  cd v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * u + coeffs[i].get_d();
  return v;
}

}  // namespace

std::vector<std::array<cd, 3>> geometric_points(const SingularCluster& c) {
  ResiduePoint rp = residue_point(c.prime);
  Mat3 inv = c.chart.to_new.inverse();
  std::vector<std::array<cd, 3>> pts;
  for (cd u : complex_roots(rp.modulus)) {
    std::array<cd, 3> a{eval_in(rp.coords[0], u), eval_in(rp.coords[1], u), cd(1)};
    std::array<cd, 3> X{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) X[i] += inv.a[i][j].get_d() * a[j];
    pts.push_back(X);
  }
  auto key = [](const std::array<cd, 3>& p) {
    std::array<double, 6> k{};
    for (int i = 0; i < 3; ++i) {
      k[2 * i] = p[i].real();
      k[2 * i + 1] = p[i].imag();
    }
    return k;
  };
  std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return pts;
}

std::string mode_name(EqualityMode m) { return m == EqualityMode::Strict ? "strict" : "incidence"; }

EqualityMode parse_mode(const std::string& s) {
  if (s == "strict") return EqualityMode::Strict;
  if (s == "incidence") return EqualityMode::Incidence;
  throw std::invalid_argument("unknown equality mode '" + s + "'");
}

CombinatorialType combinatorial_type(const CLArrangement& A, const std::vector<SingularCluster>& clusters) {
  const auto& curves = A.curves();
  CombinatorialType T;
  std::vector<int> first(curves.size());  // first geometric index of each curve
  std::vector<std::optional<std::array<std::array<cd, 3>, 2>>> lines(curves.size());
  for (std::size_t k = 0; k < curves.size(); ++k) {
    first[k] = static_cast<int>(T.curve_degrees.size());
    if (curves[k].kind == CurveKind::LinePair) {
      lines[k] = pair_lines(curves[k].form);
      T.curve_degrees.push_back(1);
      T.curve_degrees.push_back(1);
    } else {
      T.curve_degrees.push_back(curves[k].degree());
    }
  }
  for (const auto& c : clusters) {
    auto pt = c.point();
    std::vector<std::array<cd, 3>> geo;
    bool needs_numeric = false;
    for (std::size_t k : c.incident)
      if (lines[k] && !(pt && *vertex_of(curves[k]) == *pt)) needs_numeric = true;
    if (needs_numeric) geo = geometric_points(c);
    for (int g = 0; g < c.residue_degree; ++g) {
      // geometric curves through this point, with their source curve
      std::vector<std::pair<int, std::size_t>> through;
      std::map<std::size_t, int> count;
      for (std::size_t k : c.incident) {
        if (!lines[k]) {
          through.push_back({first[k], k});
          count[k] = 1;
        } else if (pt && *vertex_of(curves[k]) == *pt) {
          through.push_back({first[k], k});
          through.push_back({first[k] + 1, k});
          count[k] = 2;
        } else {
          auto rel = [&](const std::array<cd, 3>& l) {
            const auto& p = geo[static_cast<std::size_t>(g)];
            cd v = l[0] * p[0] + l[1] * p[1] + l[2] * p[2];
            double n = std::abs(l[0]) + std::abs(l[1]) + std::abs(l[2]);
            double m = std::abs(p[0]) + std::abs(p[1]) + std::abs(p[2]);
            return std::abs(v) / (n * m);
          };
          int which = rel((*lines[k])[0]) <= rel((*lines[k])[1]) ? 0 : 1;
          through.push_back({first[k] + which, k});
          count[k] = 1;
        }
      }
      std::vector<std::array<int, 3>> entry;
      for (std::size_t a = 0; a < through.size(); ++a) {
        entry.push_back({through[a].first, through[a].first, 0});
        for (std::size_t b = a + 1; b < through.size(); ++b) {
          auto [ga, ka] = through[a];
          auto [gb, kb] = through[b];
          int mult;
          if (ka == kb) {
            mult = 1;
          } else {
            long base = c.intersections.at({std::min(ka, kb), std::max(ka, kb)});
            long split = count[ka] * count[kb];
            if (base % split != 0) throw std::logic_error("intersection number does not split over the components");
            mult = static_cast<int>(base / split);
          }
          entry.push_back({std::min(ga, gb), std::max(ga, gb), mult});
        }
      }
      std::sort(entry.begin(), entry.end());
      T.points.push_back(std::move(entry));
    }
  }
  return T;
}

std::string CombinatorialType::canonical(EqualityMode mode) const {
  std::size_t n = curve_degrees.size();
  auto strip = [mode](std::vector<std::array<int, 3>> e) {
    if (mode == EqualityMode::Incidence) {
      e.erase(std::remove_if(e.begin(), e.end(), [](const std::array<int, 3>& t) { return t[0] != t[1]; }), e.end());
    }
    return e;
  };
  std::vector<std::vector<std::array<int, 3>>> pts;
  for (const auto& p : points) pts.push_back(strip(p));
  // Relabeling-invariant key of each curve, used to prune permutations.
  std::vector<std::vector<std::vector<int>>> inv(n);
  for (const auto& p : pts) {
    int r = 0;
    for (const auto& t : p)
      if (t[0] == t[1]) ++r;
    for (const auto& t : p) {
      if (t[0] != t[1]) continue;
      std::vector<int> sig{r};
      std::vector<int> mults;
      for (const auto& u : p)
        if (u[0] != u[1] && (u[0] == t[0] || u[1] == t[0])) mults.push_back(u[2]);
      std::sort(mults.begin(), mults.end());
      sig.insert(sig.end(), mults.begin(), mults.end());
      inv[static_cast<std::size_t>(t[0])].push_back(sig);
    }
  }
  for (auto& v : inv) std::sort(v.begin(), v.end());
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  auto key_less = [&](std::size_t a, std::size_t b) {
    if (curve_degrees[a] != curve_degrees[b]) return curve_degrees[a] < curve_degrees[b];
    return inv[a] < inv[b];
  };
  std::sort(order.begin(), order.end(), key_less);
  // blocks of curves with equal keys
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && !key_less(order[i], order[j]) && !key_less(order[j], order[i])) ++j;
    blocks.push_back({i, j});
    i = j;
  }
  std::vector<int> best;
  bool have = false;
  std::vector<int> label(n);
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      for (std::size_t pos = 0; pos < n; ++pos) label[order[pos]] = static_cast<int>(pos);
      std::vector<std::vector<std::array<int, 3>>> mapped;
      for (const auto& p : pts) {
        std::vector<std::array<int, 3>> e;
        for (const auto& t : p) {
          int a = label[static_cast<std::size_t>(t[0])], c = label[static_cast<std::size_t>(t[1])];
          e.push_back({std::min(a, c), std::max(a, c), t[2]});
        }
        std::sort(e.begin(), e.end());
        mapped.push_back(std::move(e));
      }
      std::sort(mapped.begin(), mapped.end());
      std::vector<int> flat;
      for (const auto& e : mapped) {
        flat.push_back(-1);
        for (const auto& t : e) flat.insert(flat.end(), t.begin(), t.end());
      }
      if (!have || flat < best) {
        best = std::move(flat);
        have = true;
      }
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(order.begin() + static_cast<long>(lo), order.begin() + static_cast<long>(hi));
    do {
      rec(b + 1);
    } while (std::next_permutation(order.begin() + static_cast<long>(lo), order.begin() + static_cast<long>(hi)));
  };
  rec(0);
  std::ostringstream os;
  os << "curves:";
  for (std::size_t pos = 0; pos < n; ++pos) os << " " << curve_degrees[order[pos]];
  os << " | points:";
  for (int x : best) {
    if (x == -1)
      os << " ;";
    else
      os << " " << x;
  }
  return os.str();
}

Combinatorics combinatorics(const CLArrangement& A, const std::vector<SingularCluster>& clusters) {
  Combinatorics out;
  long n = static_cast<long>(A.geometric_size());
  out.h1 = n - 1;
  long sum = 0;
  std::vector<long> mob;
  for (const auto& c : clusters) {
    sum += c.residue_degree * (c.branches - 1);
    for (int g = 0; g < c.residue_degree; ++g) mob.push_back(c.branches - 1);
  }
  out.h2 = sum - n + 1;
  out.type = combinatorial_type(A, clusters);
  if (A.lines_only()) {
    std::sort(mob.rbegin(), mob.rend());
    out.mobius = mob;
    out.poincare = std::vector<long>{1, n - 1, sum - n + 1};
  }
  return out;
}

Combinatorics combinatorics(const CLArrangement& A) { return combinatorics(A, singular_clusters(A)); }

bool combinatorially_equal(const CLArrangement& A, const CLArrangement& B, EqualityMode mode) {
  if (A.geometric_size() != B.geometric_size()) return false;
  auto a = combinatorial_type(A, singular_clusters(A)).canonical(mode);
  auto b = combinatorial_type(B, singular_clusters(B)).canonical(mode);
  return a == b;
}

}  // namespace clfree
