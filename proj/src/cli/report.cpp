#include "clfree/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "clfree/parse.hpp"

namespace clfree {

namespace {

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json integers_json(const std::vector<Integer>& v) {
  Json j = Json::array();
  for (const auto& n : v) j.push_back(integer_json(n));
  return j;
}

std::string join(const std::vector<long>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

Json claim_json(const Claim& c) {
  Json j;
  j["status"] = status_name(c.status);
  if (c.status == Status::Free) j["exponents"] = c.exponents;
  return j;
}

// "0 -> S(-4) -> S(-3)^3 -> D0 -> 0" with every twist moved by `shift`.
std::string resolution_text(const FreenessVerdict& v, long shift) {
  std::string s = "0";
  for (auto it = v.resolution.steps.rbegin(); it != v.resolution.steps.rend(); ++it) {
    GradedFreeModule m = *it;
    for (auto& t : m.twists) t += shift;
    s += " -> " + m.to_string();
  }
  return s + " -> D0 -> 0";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

CLArrangement arrangement_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("curves") || !j["curves"].is_array())
    throw ValidationError("expected an object with a \"curves\" array");
  std::vector<Curve> curves;
  for (const auto& c : j["curves"]) {
    if (!c.is_object() || !c.contains("form") || !c["form"].is_string())
      throw ValidationError("every curve needs a \"form\" string");
    Polynomial form(Ring::xyz());
    try {
      form = parse_poly(c["form"].get<std::string>(), Ring::xyz());
    } catch (const ParseError& e) {
      throw ValidationError("cannot parse \"" + c["form"].get<std::string>() + "\": " + e.what());
    }
    if (c.contains("kind")) {
      if (!c["kind"].is_string()) throw ValidationError("curve kind must be a string");
      CurveKind kind;
      try {
        kind = parse_kind(c["kind"].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
      }
      curves.push_back({kind, form});
    } else {
      curves.push_back(CLArrangement::from_forms({form}).curves().front());
    }
  }
  return CLArrangement::build(std::move(curves));
}

CLArrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return arrangement_from_json(j);
}

Json arrangement_to_json(const CLArrangement& A) {
  Json curves = Json::array();
  for (const auto& c : A.curves()) curves.push_back({{"kind", kind_name(c.kind)}, {"form", c.form.to_string()}});
  return {{"curves", curves}};
}

AnalysisReport analyze(const CLArrangement& A, const ReportOptions& opts) {
  AnalysisReport r;
  r.curves = A.size();
  r.geometric_curves = A.geometric_size();
  r.degree = A.degree();
  for (const auto& c : A.curves()) r.forms.push_back(c.form.to_string());
  auto clusters = singular_clusters(A);
  QuasihomogeneityReport q = quasihomogeneity(A, clusters, opts.local);
  for (const auto& p : q.points) {
    const SingularCluster& c = clusters[p.cluster];
    r.singular.push_back({c.label, c.residue_degree, c.branches, p.mu, p.tau, p.ordinary});
    r.geometric_points += static_cast<std::size_t>(c.residue_degree);
  }
  r.jacobian_degree = q.jacobian_degree;
  r.sum_mu = q.sum_mu;
  r.sum_tau = q.sum_tau;
  if (r.sum_tau != r.jacobian_degree) throw std::logic_error("sum of Tjurina numbers differs from deg J");
  r.verdict = freeness_verdict(A);
  if (opts.certificate) r.certificate = certify(A);
  r.combinatorics = combinatorics(A, clusters);
  return r;
}

Json verdict_to_json(const FreenessVerdict& v) {
  Json j;
  j["free"] = v.free;
  if (v.free) j["exponents"] = v.exponents;
  Json steps = Json::array();
  for (const auto& s : v.resolution.steps) steps.push_back(s.sorted_twists());
  j["resolution"] = steps;
  j["resolution_text"] = resolution_text(v, 0);
  j["jacobian_resolution_text"] = resolution_text(v, v.jacobian_shift);
  j["jacobian_shift"] = v.jacobian_shift;
  j["hilbert_numerator"] = integers_json(v.hilbert.numerator);
  return j;
}

Json certificate_to_json(const FreenessCertificate& c) {
  Json chain = Json::array();
  for (const auto& s : c.chain) {
    Json step;
    step["hash"] = s.hash;
    step["arrangement"] = s.arrangement;
    step["rule"] = s.rule;
    if (s.rule != "direct") {
      step["added"] = s.removed;
      step["k"] = s.k;
    }
    step["quasihomogeneous"] = s.quasihomogeneous;
    step["claim"] = claim_json(s.claim);
    chain.push_back(step);
  }
  Json j;
  j["claim"] = claim_json(c.claim());
  j["chain"] = chain;
  if (c.direct) {
    j["direct"] = claim_json(*c.direct);
    j["consistent"] = c.consistent();
  }
  return j;
}

Json report_to_json(const AnalysisReport& r) {
  Json j;
  j["schema"] = 1;
  j["curves"] = r.forms;
  j["n_curves"] = r.curves;
  j["n_geometric_curves"] = r.geometric_curves;
  j["degree"] = r.degree;
  Json rows = Json::array();
  for (const auto& s : r.singular)
    rows.push_back({{"cluster", s.label},
                    {"residue_degree", s.residue_degree},
                    {"branches", s.branches},
                    {"mu", s.mu},
                    {"tau", s.tau},
                    {"ordinary", s.ordinary},
                    {"quasihomogeneous", s.quasihomogeneous()}});
  j["singular_points"] = rows;
  j["n_singular_points"] = r.geometric_points;
  j["jacobian_degree"] = r.jacobian_degree;
  j["sum_mu"] = r.sum_mu;
  j["sum_tau"] = r.sum_tau;
  j["quasihomogeneous"] = r.quasihomogeneous();
  j["freeness"] = verdict_to_json(r.verdict);
  if (r.certificate) j["certificate"] = certificate_to_json(*r.certificate);
  Json comb;
  comb["h1"] = r.combinatorics.h1;
  comb["h2"] = r.combinatorics.h2;
  if (r.combinatorics.poincare) comb["poincare"] = *r.combinatorics.poincare;
  j["combinatorics"] = comb;
  return j;
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << r.curves << " curves";
  if (r.geometric_curves != r.curves) os << " (" << r.geometric_curves << " geometric)";
  os << ", deg F = " << r.degree << "\n";
  for (const auto& f : r.forms) os << "  " << f << "\n";
  os << "\nsingular points: " << r.geometric_points << "\n";
  os << "  point                          deg   r    mu   tau  ordinary  qh\n";
  for (const auto& s : r.singular) {
    std::string label = s.label;
    if (label.size() < 30) label.resize(30, ' ');
    char buf[96];
    std::snprintf(buf, sizeof buf, " %4d %3d %5ld %5ld  %-8s  %s", s.residue_degree, s.branches, s.mu, s.tau,
                  yes_no(s.ordinary).c_str(), yes_no(s.quasihomogeneous()).c_str());
    os << "  " << label << buf << "\n";
  }
  os << "\ndeg J = " << r.jacobian_degree << ", sum mu = " << r.sum_mu << ", sum tau = " << r.sum_tau
     << (r.quasihomogeneous() ? " (quasihomogeneous)" : " (not quasihomogeneous)") << "\n";
  const auto& v = r.verdict;
  if (v.free)
    os << "free with exponents " << join(v.exponents) << "\n";
  else
    os << "not free\n";
  os << "D0 resolution: " << resolution_text(v, 0) << "\n";
  os << "  as syzygies on J: " << resolution_text(v, v.jacobian_shift) << "\n";
  os << "h1 = " << r.combinatorics.h1 << ", h2 = " << r.combinatorics.h2 << "\n";
  if (r.combinatorics.poincare) os << "Poincare polynomial coefficients: " << join(*r.combinatorics.poincare) << "\n";
  if (r.certificate) os << "\ncertificate:\n" << certificate_to_text(*r.certificate);
  return os.str();
}

std::string certificate_to_text(const FreenessCertificate& c) { return c.transcript(); }

Comparison compare(const CLArrangement& A, const CLArrangement& B, EqualityMode mode) {
  Comparison c;
  c.mode = mode;
  c.strict_equal = combinatorially_equal(A, B, EqualityMode::Strict);
  c.incidence_equal = combinatorially_equal(A, B, EqualityMode::Incidence);
  c.first = freeness_verdict(A);
  c.second = freeness_verdict(B);
  return c;
}

Json comparison_to_json(const Comparison& c) {
  Json j;
  j["schema"] = 1;
  j["mode"] = mode_name(c.mode);
  j["combinatorially_equal"] = c.equal();
  j["strict_equal"] = c.strict_equal;
  j["incidence_equal"] = c.incidence_equal;
  j["first"] = verdict_to_json(c.first);
  j["second"] = verdict_to_json(c.second);
  j["freeness_not_combinatorial"] = c.not_combinatorial();
  return j;
}

std::string comparison_to_text(const Comparison& c) {
  std::ostringstream os;
  auto line = [](const FreenessVerdict& v) {
    return (v.free ? "free with exponents " + join(v.exponents) : std::string("not free")) + ", D0: " +
           resolution_text(v, 0) + " (syzygies on J: " + resolution_text(v, v.jacobian_shift) + ")";
  };
  os << "combinatorially equal (" << mode_name(c.mode) << "): " << yes_no(c.equal()) << "\n";
  os << "  strict: " << yes_no(c.strict_equal) << ", incidence only: " << yes_no(c.incidence_equal) << "\n";
  os << "first:  " << line(c.first) << "\n";
  os << "second: " << line(c.second) << "\n";
  if (c.not_combinatorial()) os << "same combinatorics, different freeness\n";
  return os.str();
}

}  // namespace clfree
