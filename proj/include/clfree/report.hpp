#ifndef CLFREE_REPORT_HPP
#define CLFREE_REPORT_HPP

// Arrangement files and the reports printed by the command line tool.
// Everything here is deterministic: the same input gives the same bytes.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clfree/addel.hpp"
#include "clfree/localinv.hpp"
#include "json.hpp"

namespace clfree {

using Json = nlohmann::ordered_json;

// Missing or unreadable file; the tool exits with 1.
class FileError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// {"curves": [{"kind": "line" | "conic" | "line_pair", "form": "..."}]}.
// Malformed JSON, bad kinds and invalid curves all raise ValidationError.
CLArrangement arrangement_from_json(const Json& j);
CLArrangement load_arrangement(const std::string& path);
Json arrangement_to_json(const CLArrangement& A);

struct ReportOptions {
  bool certificate = true;
  LocalOptions local;
  EqualityMode mode = EqualityMode::Strict;
};

struct SingularRow {
  std::string label;
  int residue_degree = 1;
  int branches = 0;
  long mu = 0;
  long tau = 0;
  bool ordinary = false;
  bool quasihomogeneous() const { return mu == tau; }
};

struct AnalysisReport {
  std::size_t curves = 0;
  std::size_t geometric_curves = 0;
  int degree = 0;
  std::vector<std::string> forms;
  std::vector<SingularRow> singular;
  std::size_t geometric_points = 0;
  long jacobian_degree = 0;
  long sum_mu = 0;
  long sum_tau = 0;
  FreenessVerdict verdict;
  std::optional<FreenessCertificate> certificate;
  Combinatorics combinatorics;

  bool quasihomogeneous() const { return sum_mu == sum_tau; }
};

AnalysisReport analyze(const CLArrangement& A, const ReportOptions& opts = {});

Json verdict_to_json(const FreenessVerdict& v);
Json certificate_to_json(const FreenessCertificate& c);
Json report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);
std::string certificate_to_text(const FreenessCertificate& c);

struct Comparison {
  bool strict_equal = false;
  bool incidence_equal = false;
  EqualityMode mode = EqualityMode::Strict;
  FreenessVerdict first, second;

  bool equal() const { return mode == EqualityMode::Strict ? strict_equal : incidence_equal; }
  // Same combinatorics, different freeness.
  bool not_combinatorial() const { return equal() && first.free != second.free; }
};

Comparison compare(const CLArrangement& A, const CLArrangement& B, EqualityMode mode = EqualityMode::Strict);
Json comparison_to_json(const Comparison& c);
std::string comparison_to_text(const Comparison& c);

}  // namespace clfree

#endif
