#include <algorithm>
#include <sstream>

#include "clfree/groebner.hpp"

namespace clfree {

namespace {

using Num = std::vector<Integer>;

void trim(Num& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

Num mul(const Num& a, const Num& b) {
  Num r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

void add_shifted(Num& a, const Num& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  trim(a);
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.e < b.e;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

Num numerator(std::vector<Monomial> gens, std::size_t n) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {Integer(1)};
  if (gens.front().is_one()) return {Integer(0)};
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!coprime(gens[i], gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    Num r{Integer(1)};
    for (const auto& g : gens) {
      Num f(static_cast<std::size_t>(g.degree()) + 1, Integer(0));
      f[0] = 1;
      f.back() = -1;
      r = mul(r, f);
    }
    return r;
  }
  // Pivot on the variable occurring in the most generators, at the median of
  // its positive exponents.
  std::size_t best = 0, best_count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t count = 0;
    for (const auto& g : gens)
      if (g.e[v] > 0) ++count;
    if (count > best_count) {
      best_count = count;
      best = v;
    }
  }
  std::vector<std::uint32_t> exps;
  for (const auto& g : gens)
    if (g.e[best] > 0) exps.push_back(g.e[best]);
  std::sort(exps.begin(), exps.end());
  std::uint32_t k = exps[exps.size() / 2];
  if (exps.size() > 1 && k == exps.back()) k = exps.front();
  Monomial pivot = Monomial::var(best, k);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  for (auto g : gens) {
    g.e[best] = g.e[best] > k ? g.e[best] - k : 0;
    colon.push_back(g);
  }
  Num r = numerator(std::move(plus), n);
  add_shifted(r, numerator(std::move(colon), n), k);
  return r;
}

Integer binomial_poly(const Integer& x, int r) {
  // x (x - 1) ... (x - r + 1) / r!
  if (r < 0) return 0;
  Integer num = 1, den = 1;
  for (int i = 0; i < r; ++i) {
    num *= x - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace

std::vector<Integer> hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars) {
  return numerator(gens, nvars);
}

HilbertData hilbert_from_numerator(std::vector<Integer> num, std::size_t nvars) {
  trim(num);
  HilbertData h;
  h.numerator = num;
  Num q = num;
  int divisions = 0;
  bool zero = q.size() == 1 && q[0] == 0;
  while (!zero && divisions < static_cast<int>(nvars)) {
    Integer at1 = 0;
    for (const auto& c : q) at1 += c;
    if (at1 != 0) break;
    // synthetic division by (1 - t)
    Num r(q.size() - 1, Integer(0));
    Integer acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc += q[i];
      r[i] = acc;
    }
    q = r;
    trim(q);
    ++divisions;
  }
  h.dimension = zero ? -1 : static_cast<int>(nvars) - divisions;
  h.reduced_numerator = q;
  h.degree = 0;
  for (const auto& c : q) h.degree += c;
  return h;
}

Integer HilbertData::polynomial_value(long t) const {
  if (dimension <= 0) return 0;
  Integer v = 0;
  for (std::size_t i = 0; i < reduced_numerator.size(); ++i)
    v += reduced_numerator[i] * binomial_poly(Integer(t - static_cast<long>(i) + dimension - 1), dimension - 1);
  return v;
}

HilbertData hilbert(const Ideal& I) {
  if (!I.is_homogeneous()) throw std::invalid_argument("Hilbert series needs a homogeneous ideal");
  std::vector<Monomial> leads;
  for (const auto& g : I.basis()) leads.push_back(g.leading_term().mono);
  return hilbert_from_numerator(numerator(leads, I.ring().arity()), I.ring().arity());
}

std::string HilbertData::numerator_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    const Integer& c = numerator[i];
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

}  // namespace clfree
