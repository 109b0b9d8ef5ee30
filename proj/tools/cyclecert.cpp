#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclecert/error.hpp"
#include "cyclecert/problem.hpp"
#include "cyclecert/report.hpp"

using namespace cyclecert;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string file;
  std::string json_out;
  std::string sweep;
  std::string samples;
  std::string window;
  int res = 200;
};

struct Sweep {
  std::string param;
  Rational lo, hi, step;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

Sweep parse_sweep(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw Error(ErrorKind::SchemaError, "--sweep expects param=lo:hi:step");
  auto parts = split(text.substr(eq + 1), ':');
  if (parts.size() != 3) throw Error(ErrorKind::SchemaError, "--sweep expects param=lo:hi:step");
  Sweep s{text.substr(0, eq), parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
  if (s.step <= 0) throw Error(ErrorKind::SchemaError, "--sweep step must be positive");
  if (s.hi < s.lo) throw Error(ErrorKind::SchemaError, "--sweep needs lo <= hi");
  if ((s.hi - s.lo) / s.step > 10000) throw Error(ErrorKind::SchemaError, "--sweep grid exceeds 10001 points");
  return s;
}

Window parse_window(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 4) throw Error(ErrorKind::SchemaError, "--window expects x0,x1,y0,y1");
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]), parse_rational(parts[3])};
}

void write_json(const std::string& target, const json& doc) {
  if (target.empty()) return;
  std::string text = doc.dump(2) + "\n";
  if (target == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(target, std::ios::binary);
  if (!out) throw Error(ErrorKind::IOError, "cannot write '" + target + "'");
  out << text;
}

Report error_report(const std::string& method, const Error& e) {
  Report rep;
  rep.method = method;
  rep.status = ReportStatus::Error;
  rep.certificate["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  rep.human_summary = std::string("error: ") + e.what();
  return rep;
}

int run_single(const ProblemSpec& spec, const Options& opt) {
  Report rep = run_certificate(spec);
  std::cout << rep.human_summary << "\n";
  write_json(opt.json_out, rep.to_json());
  if (!opt.samples.empty()) {
    if (!rep.curve) throw Error(ErrorKind::SchemaError, "method '" + spec.method + "' has no curve to sample");
    export_curve_samples(rep.curve->bind(spec.system.params), parse_window(opt.window), opt.res, opt.samples);
    std::cout << "curve samples (not a certificate) written to " << opt.samples << "\n";
  }
  return rep.exit_code_hint();
}

int run_sweep(const ProblemSpec& base, const Options& opt) {
  if (!opt.samples.empty()) throw Error(ErrorKind::SchemaError, "--samples cannot be combined with --sweep");
  Sweep sw = parse_sweep(opt.sweep);
  if (!base.system.params.count(sw.param)) {
    throw Error(ErrorKind::SchemaError, "--sweep parameter '" + sw.param + "' is not declared in [params]");
  }
  std::vector<Rational> values;
  for (Rational v = sw.lo; v <= sw.hi; v = Rational(v + sw.step)) values.push_back(v);

  std::vector<std::future<Report>> jobs;
  for (const auto& v : values) {
    ProblemSpec spec = base;
    spec.system.params[sw.param] = v;
    jobs.push_back(std::async(std::launch::async, [spec = std::move(spec)] { return run_certificate(spec); }));
  }
  json reports = json::array();
  bool any_error = false;
  bool any_inconclusive = false;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Report rep = jobs[i].get();
    any_error |= rep.status == ReportStatus::Error;
    any_inconclusive |= rep.status == ReportStatus::Inconclusive;
    std::string first_line = rep.human_summary.substr(0, rep.human_summary.find('\n'));
    std::cout << sw.param << " = " << to_string(values[i]) << ": " << first_line << "\n";
    reports.push_back({{"value", to_string(values[i])}, {"report", rep.to_json()}});
  }
  json doc = {{"schema_version", kReportSchemaVersion},
              {"tool_version", kToolVersion},
              {"sweep",
               {{"param", sw.param}, {"lo", to_string(sw.lo)}, {"hi", to_string(sw.hi)}, {"step", to_string(sw.step)}}},
              {"reports", reports}};
  write_json(opt.json_out, doc);
  return any_error ? 1 : any_inconclusive ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclecert: exact Bendixson-Dulac certificates bounding limit cycles of planar polynomial systems"};
  app.require_subcommand(1);
  Options opt;
  auto* check = app.add_subcommand("check", "certify one problem file");
  check->add_option("file", opt.file, "problem file")->required();
  check->add_option("--json", opt.json_out, "write the JSON report here ('-' for stdout)");
  check->add_option("--sweep", opt.sweep, "param=lo:hi:step, evaluated in parallel");
  auto* samples = check->add_option("--samples", opt.samples, "write non-certified curve samples (CSV)");
  auto* window = check->add_option("--window", opt.window, "x0,x1,y0,y1 sampling window");
  check->add_option("--res", opt.res, "grid points per axis (>= 2)")->check(CLI::Range(2, 4000));
  samples->needs(window);
  window->needs(samples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string method = "unknown";
  try {
    ProblemSpec spec = load_problem(opt.file);
    method = spec.method;
    return opt.sweep.empty() ? run_single(spec, opt) : run_sweep(spec, opt);
  } catch (const Error& e) {
    Report rep = error_report(method, e);
    std::cout << rep.human_summary << "\n";
    try {
      write_json(opt.json_out, rep.to_json());
    } catch (const Error&) {
    }
    return 1;
  }
}
