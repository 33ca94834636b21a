// clfree: freeness, local invariants and addition-deletion certificates for
// arrangements of lines and conics.
//
// Exit codes: 0 success, 1 file or usage error, 2 invalid arrangement.

#include <iostream>

#include "CLI11.hpp"
#include "clfree/report.hpp"

using namespace clfree;

namespace {

struct Flags {
  bool json = false;
  bool text = false;
  bool no_certificate = false;
  std::optional<unsigned long> chart_seed;
  std::string equality = "strict";
};

void add_format(CLI::App* cmd, Flags& f) {
  auto* j = cmd->add_flag("--json", f.json, "JSON output");
  auto* t = cmd->add_flag("--text", f.text, "plain text output (default)");
  j->excludes(t);
}

int run(const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "invalid arrangement: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Freeness of conic-line arrangements"};
  app.require_subcommand(1);
  Flags f;

  std::string path, other;
  auto* analyze_cmd = app.add_subcommand("analyze", "singularities, deg J, freeness and a certificate");
  analyze_cmd->add_option("file", path, "arrangement JSON")->required();
  add_format(analyze_cmd, f);
  analyze_cmd->add_flag("--no-certificate", f.no_certificate, "skip the addition-deletion certificate");
  analyze_cmd->add_option("--chart-seed", f.chart_seed, "compute local invariants in a random chart");

  auto* certify_cmd = app.add_subcommand("certify", "addition-deletion certificate");
  certify_cmd->add_option("file", path, "arrangement JSON")->required();
  add_format(certify_cmd, f);

  auto* compare_cmd = app.add_subcommand("compare", "combinatorics and freeness of two arrangements");
  compare_cmd->add_option("first", path, "arrangement JSON")->required();
  compare_cmd->add_option("second", other, "arrangement JSON")->required();
  add_format(compare_cmd, f);
  compare_cmd->add_option("--equality", f.equality, "strict or incidence")
      ->check(CLI::IsMember({"strict", "incidence"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*analyze_cmd)
    return run([&] {
      ReportOptions opts;
      opts.certificate = !f.no_certificate;
      opts.local.chart_seed = f.chart_seed;
      AnalysisReport r = analyze(load_arrangement(path), opts);
      if (f.json)
        std::cout << report_to_json(r).dump(2) << "\n";
      else
        std::cout << report_to_text(r);
    });
  if (*certify_cmd)
    return run([&] {
      FreenessCertificate c = certify(load_arrangement(path));
      if (f.json) {
        Json j = certificate_to_json(c);
        j["schema"] = 1;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << certificate_to_text(c);
      }
    });
  return run([&] {
    CLArrangement A = load_arrangement(path), B = load_arrangement(other);
    Comparison c = compare(A, B, parse_mode(f.equality));
    if (f.json)
      std::cout << comparison_to_json(c).dump(2) << "\n";
    else
      std::cout << comparison_to_text(c);
  });
}
