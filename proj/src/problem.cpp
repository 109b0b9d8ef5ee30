#include "cyclecert/problem.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "cyclecert/error.hpp"
#include "cyclecert/parser.hpp"

namespace cyclecert {

namespace {

enum class ArgKind { ExprXY, ExprX, Constant, Count, Interval, RegionText, Flag };

ArgKind arg_kind(const std::string& key) {
  static const std::map<std::string, ArgKind> kinds = {
      {"V", ArgKind::ExprXY},        {"F", ArgKind::ExprX},          {"g", ArgKind::ExprX},
      {"f", ArgKind::ExprX},         {"g0", ArgKind::ExprX},         {"g1", ArgKind::ExprX},
      {"h0", ArgKind::ExprX},        {"h1", ArgKind::ExprX},         {"h2", ArgKind::ExprX},
      {"v2", ArgKind::ExprX},        {"s", ArgKind::Constant},       {"lambda", ArgKind::Constant},
      {"c0", ArgKind::Constant},     {"c1", ArgKind::Constant},      {"n", ArgKind::Count},
      {"degree_cap", ArgKind::Count}, {"interval", ArgKind::Interval}, {"region", ArgKind::RegionText},
      {"unique_critical_point", ArgKind::Flag},
  };
  if (auto it = kinds.find(key); it != kinds.end()) return it->second;
  return ArgKind::Constant;  // lotka-volterra a..f
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool valid_name(const std::string& name) {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
  return std::regex_match(name, re);
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

void check_arg(const std::string& key, const std::string& value, const std::vector<std::string>& params) {
  switch (arg_kind(key)) {
    case ArgKind::ExprXY:
      parse_expression(value, {"x", "y"}, params);
      break;
    case ArgKind::ExprX:
      parse_expression(value, {"x"}, params);
      break;
    case ArgKind::Constant:
      parse_expression(value, {}, params);
      break;
    case ArgKind::Count: {
      static const std::regex re("[0-9]+");
      if (!std::regex_match(trim(value), re)) {
        throw Error(ErrorKind::SchemaError, "'" + key + "' must be a nonnegative integer, got \"" + value + "\"");
      }
      break;
    }
    case ArgKind::Interval:
      parse_interval(value);
      break;
    case ArgKind::RegionText:
      parse_region(value);
      break;
    case ArgKind::Flag:
      if (value != "true" && value != "false") {
        throw Error(ErrorKind::SchemaError, "'" + key + "' must be \"true\" or \"false\"");
      }
      break;
  }
}

std::optional<Rational> parse_endpoint(const std::string& text, bool& infinite, int expected_inf_sign) {
  std::string t = trim(text);
  if (t == "inf" || t == "+inf" || t == "-inf") {
    int sign = t == "-inf" ? -1 : 1;
    if (sign != expected_inf_sign) throw Error(ErrorKind::ParseError, "infinite endpoint on the wrong side");
    infinite = true;
    return std::nullopt;
  }
  infinite = false;
  return parse_rational(t);
}

}  // namespace

std::vector<std::string> ProblemSpec::param_names() const {
  std::vector<std::string> names;
  for (const auto& [name, value] : system.params) names.push_back(name);
  return names;
}

const std::vector<std::string>& known_methods() {
  static const std::vector<std::string> methods = {"direct",         "polar",         "lienard",      "kolmogorov",
                                                   "massera",        "lotka-volterra", "mt-recurrence",
                                                   "second-method"};
  return methods;
}

const MethodSchema& method_schema(const std::string& method) {
  static const std::map<std::string, MethodSchema> schemas = {
      {"direct", {{"V", "s"}, {"region"}, true}},
      {"polar", {{"s"}, {"unique_critical_point"}, true}},
      {"lienard", {{"F", "g", "s"}, {"c0", "c1", "region"}, false}},
      {"kolmogorov", {{"g0", "g1", "h0", "h1", "h2", "lambda"}, {"interval"}, false}},
      {"massera", {{"f", "g"}, {"interval"}, false}},
      {"lotka-volterra", {{"a", "b", "c", "d", "e", "f"}, {}, false}},
      {"mt-recurrence", {{"s", "n", "degree_cap"}, {"region"}, true}},
      {"second-method", {{"h0", "h1", "h2", "v2"}, {"region"}, false}},
  };
  auto it = schemas.find(method);
  if (it == schemas.end()) {
    throw Error(ErrorKind::SchemaError, "unknown method '" + method + "' (expected one of " + join(known_methods()) + ")");
  }
  return it->second;
}

IntervalQ parse_interval(std::string_view text) {
  std::string t = trim(text);
  static const std::regex re(R"(([\(\[])([^,]*),([^,]*)([\)\]]))");
  std::smatch m;
  if (!std::regex_match(t, m, re)) {
    throw Error(ErrorKind::ParseError, "malformed interval \"" + t + "\" (expected e.g. \"(0, inf)\")");
  }
  bool lo_inf = false;
  bool hi_inf = false;
  auto lo = parse_endpoint(m[2].str(), lo_inf, -1);
  auto hi = parse_endpoint(m[3].str(), hi_inf, 1);
  bool lo_closed = m[1].str() == "[";
  bool hi_closed = m[4].str() == "]";
  if ((lo_inf && lo_closed) || (hi_inf && hi_closed)) {
    throw Error(ErrorKind::ParseError, "infinite endpoints must be open in \"" + t + "\"");
  }
  if (lo && hi && (*lo > *hi || (*lo == *hi && !(lo_closed && hi_closed)))) {
    throw Error(ErrorKind::ParseError, "empty interval \"" + t + "\"");
  }
  return IntervalQ(lo, lo_closed, hi, hi_closed);
}

Region parse_region(std::string_view text) {
  std::string t = trim(text);
  if (t == "plane") return Region::plane();
  static const std::regex strip_re(R"(strip\s*(.*))");
  static const std::regex quad_re(R"(quadrant\s*\(\s*([+-])\s*,\s*([+-])\s*\))");
  std::smatch m;
  if (std::regex_match(t, m, quad_re)) {
    return Region::quadrant(m[1].str() == "+" ? 1 : -1, m[2].str() == "+" ? 1 : -1);
  }
  if (std::regex_match(t, m, strip_re)) return Region::strip(parse_interval(m[1].str()));
  throw Error(ErrorKind::ParseError,
              "malformed region \"" + t + "\" (expected plane, strip(a, b) or quadrant(+, -))");
}

ProblemSpec parse_problem(std::string_view text, const std::string& source) {
  static const std::regex section_re(R"(\[\s*([A-Za-z_]+)\s*\])");
  static const std::regex kv_re(R"re(([A-Za-z_][A-Za-z0-9_]*)\s*=\s*"([^"]*)"\s*(#.*)?)re");

  std::map<std::string, std::map<std::string, std::string>> sections;
  std::string current;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::ParseError, source + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::smatch m;
    if (std::regex_match(line, m, section_re)) {
      current = m[1].str();
      if (current != "system" && current != "params" && current != "certificate") {
        throw Error(ErrorKind::SchemaError, source + ":" + std::to_string(line_no) + ": unknown section [" + current +
                                                "] (expected [system], [params], [certificate])");
      }
      if (sections.count(current)) fail("duplicate section [" + current + "]");
      sections[current];
      continue;
    }
    if (!std::regex_match(line, m, kv_re)) fail("expected key = \"value\", got: " + line);
    if (current.empty()) fail("key outside of any section");
    auto& sec = sections[current];
    if (!sec.emplace(m[1].str(), m[2].str()).second) fail("duplicate key '" + m[1].str() + "'");
  }

  if (!sections.count("certificate") || !sections["certificate"].count("method")) {
    throw Error(ErrorKind::SchemaError, source + ": missing keys: [certificate] method");
  }

  ProblemSpec spec;
  spec.source = source;
  spec.method = sections["certificate"]["method"];
  const MethodSchema& schema = method_schema(spec.method);

  for (const auto& [name, value] : sections["params"]) {
    if (!valid_name(name) || name == "x" || name == "y") {
      throw Error(ErrorKind::SchemaError, "parameter name '" + name + "' is reserved");
    }
    try {
      spec.system.params[name] = parse_rational(value);
    } catch (const Error&) {
      throw Error(ErrorKind::SchemaError, "parameter '" + name + "' must be an exact rational such as \"-3/4\", got \"" +
                                              value + "\"");
    }
  }

  std::vector<std::string> missing;
  std::vector<std::string> extra;
  const auto& sys_keys = sections.count("system") ? sections["system"] : std::map<std::string, std::string>{};
  if (schema.needs_system) {
    for (const char* k : {"P", "Q"}) {
      if (!sys_keys.count(k)) missing.push_back(std::string("[system] ") + k);
    }
    for (const auto& [k, v] : sys_keys) {
      if (k != "P" && k != "Q") extra.push_back("[system] " + k);
    }
  } else {
    for (const auto& [k, v] : sys_keys) extra.push_back("[system] " + k);
  }
  std::set<std::string> allowed(schema.required.begin(), schema.required.end());
  allowed.insert(schema.optional.begin(), schema.optional.end());
  for (const auto& k : schema.required) {
    if (!sections["certificate"].count(k)) missing.push_back("[certificate] " + k);
  }
  for (const auto& [k, v] : sections["certificate"]) {
    if (k != "method" && !allowed.count(k)) extra.push_back("[certificate] " + k);
  }
  if (!missing.empty() || !extra.empty()) {
    std::string msg = source + ": method '" + spec.method + "':";
    if (!missing.empty()) msg += " missing keys: " + join(missing) + ";";
    if (!extra.empty()) msg += " unexpected keys: " + join(extra) + ";";
    msg.pop_back();
    throw Error(ErrorKind::SchemaError, msg);
  }

  auto params = spec.param_names();
  if (schema.needs_system) {
    spec.system.P = parse_expression(sys_keys.at("P"), {"x", "y"}, params);
    spec.system.Q = parse_expression(sys_keys.at("Q"), {"x", "y"}, params);
    spec.has_system = true;
  }
  for (const auto& [k, v] : sections["certificate"]) {
    if (k == "method") continue;
    check_arg(k, v, params);
    spec.args[k] = v;
  }
  return spec;
}

ProblemSpec load_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IOError, "cannot read problem file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), path.string());
}

}  // namespace cyclecert
