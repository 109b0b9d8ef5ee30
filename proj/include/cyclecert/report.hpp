#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "cyclecert/problem.hpp"

namespace cyclecert {

inline constexpr const char* kReportSchemaVersion = "1";
inline constexpr const char* kToolVersion = "0.1.0";

enum class ReportStatus { Certified, Inconclusive, Error };
std::string to_string(ReportStatus status);

struct Report {
  std::string method;
  ReportStatus status = ReportStatus::Error;
  std::optional<int> bound;
  std::string bound_kind;  // "NoCycles" / "AtMost" / "" when no bound
  nlohmann::ordered_json certificate = nlohmann::ordered_json::object();
  std::string human_summary;
  std::optional<RationalFunction> curve;  // the V whose zero set matters, if any

  int exit_code_hint() const;
  nlohmann::ordered_json to_json() const;
};

/// Dispatches to the certificate modules. Library errors become
/// status = error; never throws for an Error raised by a module.
Report run_certificate(const ProblemSpec& spec);

/// Grid of sign(V) over a window plus midpoints of adjacent sign changes.
/// Floating point, not a certificate. Throws IOError, SchemaError (bad window
/// or resolution < 2).
struct Window {
  Rational x0, x1, y0, y1;
};
void export_curve_samples(const RationalFunction& V, const Window& window, int resolution,
                          const std::filesystem::path& path);

}  // namespace cyclecert
