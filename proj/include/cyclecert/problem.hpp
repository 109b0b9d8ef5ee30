#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclecert/system.hpp"

namespace cyclecert {

/// One parsed problem file.
///
///   [system]        P = "...", Q = "..."       (direct, polar, mt-recurrence)
///   [params]        name = "rational"
///   [certificate]   method = "...", then the method's own keys
///
/// Expressions may use the declared parameter names; they are bound when the
/// certificate runs, so a sweep only has to change `system.params`.
struct ProblemSpec {
  std::string method;
  SystemDef system;  // P = Q = 0 for methods that build their own system
  bool has_system = false;
  std::map<std::string, std::string> args;  // [certificate] without "method"
  std::string source;

  std::vector<std::string> param_names() const;
};

const std::vector<std::string>& known_methods();

/// Required and optional [certificate] keys of a method (besides "method").
struct MethodSchema {
  std::vector<std::string> required;
  std::vector<std::string> optional;
  bool needs_system = false;
};
const MethodSchema& method_schema(const std::string& method);

/// Errors: ParseError (malformed line, with line number), SchemaError
/// (unknown method, missing or extra keys), UnknownIdentifier.
ProblemSpec parse_problem(std::string_view text, const std::string& source = "<string>");

/// Errors: IOError, plus those of parse_problem.
ProblemSpec load_problem(const std::filesystem::path& path);

/// "(a, b)", "[a, b]", "(0, inf)", "(-inf, 1]"; endpoints are exact rationals.
IntervalQ parse_interval(std::string_view text);

/// "plane", "strip(a, b)", "quadrant(+, -)".
Region parse_region(std::string_view text);

}  // namespace cyclecert
