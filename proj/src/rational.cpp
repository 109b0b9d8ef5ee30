#include "cyclecert/rational.hpp"

#include <cctype>

#include "cyclecert/error.hpp"

namespace cyclecert {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::UnboundParameter: return "UnboundParameter";
    case ErrorKind::DivisionByZeroDenominator: return "DivisionByZeroDenominator";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::TopologyUnsupported: return "TopologyUnsupported";
    case ErrorKind::NonzeroAtOrigin: return "NonzeroAtOrigin";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::ZeroW: return "ZeroW";
    case ErrorKind::ZeroG1: return "ZeroG1";
    case ErrorKind::GOriginViolation: return "GOriginViolation";
    case ErrorKind::WrongShape: return "WrongShape";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::IOError: return "IOError";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    Integer d{std::string(den)};
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    value = Rational(Integer(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw Error(ErrorKind::ParseError, "malformed decimal '" + std::string(text) + "'");
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole));
    value = Rational(w * scale + Integer(std::string(frac)), scale);
  } else {
    if (!all_digits(body)) {
      throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    value = Rational(Integer(std::string(body)));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace cyclecert
