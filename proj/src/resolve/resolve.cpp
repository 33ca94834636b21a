#include "clfree/resolve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "clfree/groebner.hpp"
#include "groebner/engine.hpp"

namespace clfree {

namespace {

void add_shifted(std::vector<Integer>& a, const std::vector<Integer>& b, long shift, int sign) {
  if (shift < 0) throw std::domain_error("negative twist in a Hilbert series");
  std::size_t s = static_cast<std::size_t>(shift);
  if (a.size() < b.size() + s) a.resize(b.size() + s, Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i + s] += sign * b[i];
}

void trim(std::vector<Integer>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::string poly_string(const std::vector<Integer>& num) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num.size(); ++i) {
    const Integer& c = num[i];
    if (c == 0) continue;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    Integer a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

gb::Order module_order(const Ring& ring, const GradedFreeModule& F) {
  gb::Order o;
  o.nvars = ring.arity();
  o.twist = F.twists;
  return o;
}

gb::Vec to_vec(const Vector& v, const gb::Order& o) {
  return gb::from_polynomials(v, o);
}

Vector from_vec(const gb::Vec& v, const Ring& ring, std::size_t rank) {
  Vector out;
  for (std::uint32_t c = 0; c < rank; ++c) out.push_back(gb::to_polynomial(v, ring, c));
  return out;
}

std::vector<gb::Vec> basis_of(const Ring& ring, const GradedFreeModule& F, const std::vector<Vector>& gens) {
  gb::Order o = module_order(ring, F);
  std::vector<gb::Vec> in;
  for (const auto& g : gens) in.push_back(to_vec(g, o));
  return gb::groebner(std::move(in), o);
}

bool in_span(const Ring& ring, const GradedFreeModule& F, const std::vector<gb::Vec>& basis, const Vector& v) {
  gb::Order o = module_order(ring, F);
  return gb::normal_form(to_vec(v, o), basis, o).empty();
}

}  // namespace

std::vector<long> GradedFreeModule::sorted_twists() const {
  std::vector<long> t = twists;
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<Integer> GradedFreeModule::hilbert_numerator() const {
  std::vector<Integer> num;
  for (long a : twists) add_shifted(num, {Integer(1)}, a, 1);
  trim(num);
  return num;
}

std::string GradedFreeModule::to_string() const {
  if (twists.empty()) return "0";
  std::vector<long> t = sorted_twists();
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i;
    while (j < t.size() && t[j] == t[i]) ++j;
    if (i > 0) os << "+";
    os << "S(" << (t[i] == 0 ? "" : "-") << t[i] << ")";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

PolyMatrix::PolyMatrix(const Ring& ring, std::size_t rows, std::size_t cols)
    : ring_(&ring), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring)) {}

PolyMatrix PolyMatrix::from_columns(const Ring& ring, std::size_t rows, const std::vector<Vector>& columns) {
  PolyMatrix m(ring, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column of the wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector PolyMatrix::column(std::size_t c) const {
  Vector v;
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix sizes do not match");
  PolyMatrix m(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

PresentedModule::PresentedModule(const Ring& ring, GradedFreeModule ambient, std::vector<Vector> generators)
    : ring_(&ring), ambient_(std::move(ambient)) {
  for (auto& g : generators) {
    if (g.size() != ambient_.rank()) throw std::invalid_argument("generator length differs from the ambient rank");
    bool seen = false;
    long deg = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].ring() != ring) throw std::invalid_argument("generator entry from a different ring");
      if (g[i].is_zero()) continue;
      if (!g[i].is_homogeneous()) throw std::invalid_argument("generator entry is not homogeneous");
      long d = g[i].degree() + ambient_.twists[i];
      if (seen && d != deg) throw std::invalid_argument("generator is not homogeneous for the ambient twists");
      seen = true;
      deg = d;
    }
    if (!seen) continue;
    gens_.push_back(std::move(g));
    degrees_.push_back(deg);
  }
}

bool PresentedModule::contains(const Vector& v) const {
  if (gens_.empty()) return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
  return in_span(*ring_, ambient_, basis_of(*ring_, ambient_, gens_), v);
}

PresentedModule syzygies(const PresentedModule& M) {
  const Ring& R = M.ring();
  GradedFreeModule cover = M.cover();
  if (M.generators().empty()) return PresentedModule(R, cover, {});
  gb::Order o = module_order(R, M.ambient());
  std::vector<gb::Vec> in;
  for (const auto& g : M.generators()) in.push_back(to_vec(g, o));
  auto syz = gb::syzygies(in, M.ambient().rank(), o);
  std::vector<Vector> gens;
  for (const auto& s : syz) gens.push_back(from_vec(s, R, cover.rank()));
  return PresentedModule(R, cover, std::move(gens));
}

PresentedModule minimal_generators(const PresentedModule& M) {
  const Ring& R = M.ring();
  std::vector<std::size_t> idx(M.generators().size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return M.degrees()[a] < M.degrees()[b]; });
  std::vector<Vector> kept;
  std::vector<gb::Vec> basis;
  for (std::size_t i : idx) {
    const Vector& g = M.generators()[i];
    if (!kept.empty() && in_span(R, M.ambient(), basis, g)) continue;
    kept.push_back(g);
    basis = basis_of(R, M.ambient(), kept);
  }
  return PresentedModule(R, M.ambient(), std::move(kept));
}

bool GradedResolution::is_complex() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!(maps[i] * maps[i + 1]).is_zero()) return false;
  if (!augmentation.empty() && !maps.empty() && !(augmentation.front() * maps.front()).is_zero()) return false;
  return true;
}

std::map<std::pair<std::size_t, long>, long> GradedResolution::betti() const {
  std::map<std::pair<std::size_t, long>, long> b;
  for (std::size_t i = 0; i < steps.size(); ++i)
    for (long a : steps[i].twists) ++b[{i, a}];
  return b;
}

std::string GradedResolution::betti_table() const {
  auto b = betti();
  std::vector<long> rows;
  for (const auto& [key, n] : b) rows.push_back(key.second);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::size_t w = 5;
  for (const auto& [key, n] : b) w = std::max(w, std::to_string(n).size());
  for (long r : rows) w = std::max(w, std::to_string(r).size());
  auto pad = [w](const std::string& s) { return std::string(w - s.size(), ' ') + s; };
  std::ostringstream os;
  os << pad("twist");
  for (std::size_t i = 0; i < steps.size(); ++i) os << " " << pad(std::to_string(i));
  os << "\n";
  for (long r : rows) {
    os << pad(std::to_string(r));
    for (std::size_t i = 0; i < steps.size(); ++i) {
      auto it = b.find({i, r});
      os << " " << pad(it == b.end() ? "." : std::to_string(it->second));
    }
    os << "\n";
  }
  return os.str();
}

std::vector<Integer> GradedResolution::hilbert_numerator() const {
  std::vector<Integer> num;
  for (std::size_t i = 0; i < steps.size(); ++i) add_shifted(num, steps[i].hilbert_numerator(), 0, i % 2 ? -1 : 1);
  trim(num);
  return num;
}

namespace {

bool find_unit(const GradedResolution& R, std::size_t& map, std::size_t& row, std::size_t& col) {
  for (map = 0; map < R.maps.size(); ++map) {
    const PolyMatrix& A = R.maps[map];
    for (row = 0; row < A.rows(); ++row)
      for (col = 0; col < A.cols(); ++col)
        if (!A(row, col).is_zero() && A(row, col).is_constant()) return true;
  }
  return false;
}

PolyMatrix drop(const PolyMatrix& A, std::size_t row, std::size_t col) {
  // row or col may be SIZE_MAX for "keep all"
  std::size_t nr = A.rows() - (row < A.rows() ? 1 : 0), nc = A.cols() - (col < A.cols() ? 1 : 0);
  PolyMatrix out(A.ring(), nr, nc);
  for (std::size_t r = 0, i = 0; r < A.rows(); ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, j = 0; c < A.cols(); ++c) {
      if (c == col) continue;
      out(i, j++) = A(r, c);
    }
    ++i;
  }
  return out;
}

}  // namespace

GradedResolution minimalize(GradedResolution R) {
  std::size_t k, r, c;
  while (find_unit(R, k, r, c)) {
    PolyMatrix& A = R.maps[k];
    Rational a = A(r, c).terms().front().coef;
    // Column operations clear row r, then row r and column c split off.
    PolyMatrix next(A.ring(), A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t j = 0; j < A.cols(); ++j) {
        next(i, j) = A(i, j);
        if (!A(i, c).is_zero() && !A(r, j).is_zero()) next(i, j) -= A(i, c) * A(r, j) * (1 / a);
      }
    A = drop(next, r, c);
    if (k + 1 < R.maps.size()) R.maps[k + 1] = drop(R.maps[k + 1], c, SIZE_MAX);
    if (k > 0)
      R.maps[k - 1] = drop(R.maps[k - 1], SIZE_MAX, r);
    else if (!R.augmentation.empty())
      R.augmentation.front() = drop(R.augmentation.front(), SIZE_MAX, r);
    R.steps[k].twists.erase(R.steps[k].twists.begin() + static_cast<long>(r));
    R.steps[k + 1].twists.erase(R.steps[k + 1].twists.begin() + static_cast<long>(c));
  }
  while (!R.steps.empty() && R.steps.back().rank() == 0) {
    R.steps.pop_back();
    if (!R.maps.empty()) R.maps.pop_back();
  }
  R.minimal = true;
  return R;
}

GradedResolution free_resolution(const PresentedModule& M) {
  GradedResolution R;
  PresentedModule cur = minimal_generators(M);
  if (cur.generators().empty()) {
    R.minimal = true;
    return R;
  }
  R.steps.push_back(cur.cover());
  R.augmentation.push_back(cur.matrix());
  // Hilbert's syzygy theorem bounds the length by the number of variables.
  for (std::size_t step = 0; step <= M.ring().arity(); ++step) {
    PresentedModule next = minimal_generators(syzygies(cur));
    if (next.generators().empty()) return minimalize(std::move(R));
    R.steps.push_back(next.cover());
    R.maps.push_back(next.matrix());
    cur = std::move(next);
  }
  throw std::logic_error("resolution longer than the number of variables");
}

std::string ModuleHilbertSeries::to_string() const {
  std::ostringstream os;
  os << "(" << poly_string(numerator) << ")/(1-t)";
  if (denominator_power != 1) os << "^" << denominator_power;
  return os.str();
}

ModuleHilbertSeries module_hilbert_series(const GradedFreeModule& F, int denominator_power) {
  return {F.hilbert_numerator(), denominator_power};
}

ModuleHilbertSeries module_hilbert_series(const PresentedModule& M) {
  // HS(M) = HS(F) - HS(F/M), with F/M read off the leading terms per component.
  const Ring& R = M.ring();
  int n = static_cast<int>(R.arity());
  std::vector<Integer> num;
  if (!M.generators().empty()) {
    auto basis = basis_of(R, M.ambient(), M.generators());
    auto leads = gb::leading_terms(basis);
    for (std::uint32_t c = 0; c < M.ambient().rank(); ++c) {
      std::vector<Monomial> mons;
      for (const auto& [m, comp] : leads)
        if (comp == c) mons.push_back(m);
      if (mons.empty()) continue;
      std::vector<Integer> quotient = hilbert_numerator(mons, R.arity());
      add_shifted(num, {Integer(1)}, M.ambient().twists[c], 1);
      add_shifted(num, quotient, M.ambient().twists[c], -1);
    }
  }
  trim(num);
  return {num, n};
}

}  // namespace clfree
