#include "cyclecert/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "cyclecert/error.hpp"

namespace cyclecert {

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = 0;
  unsigned db = 0;
  for (unsigned e : a) da += e;
  for (unsigned e : b) db += e;
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

Polynomial::Polynomial(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  canonicalize();
}

Polynomial Polynomial::variable(std::string_view name) {
  TermMap t;
  t.emplace(Exponents{1}, Rational(1));
  return Polynomial({std::string(name)}, std::move(t));
}

Polynomial Polynomial::monomial(const Rational& coefficient,
                                const std::vector<std::pair<std::string, unsigned>>& powers) {
  Polynomial result(coefficient);
  for (const auto& [name, e] : powers) result *= variable(name).pow(e);
  return result;
}

void Polynomial::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [exps, c] : terms_) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) used[i] = true;
    }
  }
  bool all_used = std::all_of(used.begin(), used.end(), [](bool u) { return u; });
  if (all_used) return;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) kept.push_back(vars_[i]);
  }
  TermMap trimmed;
  for (auto& [exps, c] : terms_) {
    Exponents e;
    e.reserve(kept.size());
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (used[i]) e.push_back(exps[i]);
    }
    trimmed.emplace(std::move(e), c);
  }
  vars_ = std::move(kept);
  terms_ = std::move(trimmed);
}

Polynomial Polynomial::aligned(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> position(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    position[i] = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), vars_[i]) - vars.begin());
  }
  Polynomial out;
  out.vars_ = vars;
  for (const auto& [exps, c] : terms_) {
    Exponents e(vars.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) e[position[i]] = exps[i];
    out.terms_.emplace(std::move(e), c);
  }
  return out;
}

std::optional<std::size_t> Polynomial::index_of(std::string_view var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

Rational Polynomial::constant_term() const {
  if (terms_.empty()) return 0;
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) {
    throw Error(ErrorKind::UnboundParameter, "expected a constant, got " + to_string());
  }
  return constant_term();
}

bool Polynomial::depends_on(std::string_view var) const { return index_of(var).has_value(); }

unsigned Polynomial::total_degree() const {
  // grlex puts the highest total degree first
  if (terms_.empty()) return 0;
  unsigned d = 0;
  for (unsigned e : terms_.begin()->first) d += e;
  return d;
}

unsigned Polynomial::degree_in(std::string_view var) const {
  auto idx = index_of(var);
  if (!idx) return 0;
  unsigned d = 0;
  for (const auto& [exps, c] : terms_) d = std::max(d, exps[*idx]);
  return d;
}

Polynomial Polynomial::coefficient_in(std::string_view var, unsigned k) const {
  auto idx = index_of(var);
  if (!idx) return k == 0 ? *this : Polynomial();
  Polynomial out;
  out.vars_ = vars_;
  for (const auto& [exps, c] : terms_) {
    if (exps[*idx] != k) continue;
    Exponents e = exps;
    e[*idx] = 0;
    out.terms_.emplace(std::move(e), c);
  }
  out.canonicalize();
  return out;
}

Polynomial Polynomial::leading_coefficient_in(std::string_view var) const {
  return coefficient_in(var, degree_in(var));
}

const Rational& Polynomial::leading_coefficient() const {
  static const Rational zero(0);
  return terms_.empty() ? zero : terms_.begin()->second;
}

Polynomial Polynomial::derivative(std::string_view var) const {
  auto idx = index_of(var);
  if (!idx) return Polynomial();
  Polynomial out;
  out.vars_ = vars_;
  for (const auto& [exps, c] : terms_) {
    if (exps[*idx] == 0) continue;
    Exponents e = exps;
    Rational coeff = c * e[*idx];
    e[*idx] -= 1;
    out.terms_.emplace(std::move(e), coeff);
  }
  out.canonicalize();
  return out;
}

Polynomial Polynomial::integral(std::string_view var) const {
  std::vector<std::string> vars = merge_vars(vars_, {std::string(var)});
  Polynomial src = aligned(vars);
  auto idx = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), var) - vars.begin());
  Polynomial out;
  out.vars_ = vars;
  for (const auto& [exps, c] : src.terms_) {
    Exponents e = exps;
    e[idx] += 1;
    out.terms_.emplace(e, c / e[idx]);
  }
  out.canonicalize();
  return out;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings) const {
  Polynomial result;
  // per-variable power caches, filled lazily
  std::vector<std::vector<Polynomial>> powers(vars_.size());
  for (const auto& [exps, c] : terms_) {
    Polynomial term(c);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      auto it = bindings.find(vars_[i]);
      if (it == bindings.end()) {
        term *= variable(vars_[i]).pow(exps[i]);
        continue;
      }
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Polynomial(1));
      while (cache.size() <= exps[i]) cache.push_back(cache.back() * it->second);
      term *= cache[exps[i]];
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::bind(const std::map<std::string, Rational>& values) const {
  std::map<std::string, Polynomial> bindings;
  for (const auto& v : vars_) {
    if (auto it = values.find(v); it != values.end()) bindings.emplace(v, Polynomial(it->second));
  }
  if (bindings.empty()) return *this;
  return substitute(bindings);
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& values) const {
  std::vector<Rational> point(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it == values.end()) throw Error(ErrorKind::UnboundParameter, "variable '" + vars_[i] + "' is not bound");
    point[i] = it->second;
  }
  Rational sum = 0;
  for (const auto& [exps, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) term *= cyclecert::pow(point[i], exps[i]);
    }
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  if (vars_ != other.vars_) {
    auto vars = merge_vars(vars_, other.vars_);
    *this = aligned(vars);
    Polynomial o = other.aligned(vars);
    for (const auto& [exps, c] : o.terms_) terms_[exps] += c;
  } else {
    for (const auto& [exps, c] : other.terms_) terms_[exps] += c;
  }
  canonicalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [exps, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Polynomial();
  auto vars = merge_vars(a.vars_, b.vars_);
  Polynomial x = a.aligned(vars);
  Polynomial y = b.aligned(vars);
  Polynomial out;
  out.vars_ = vars;
  Exponents e(vars.size());
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.terms_[e] += ca * cb;
    }
  }
  out.canonicalize();
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& factor) {
  if (factor == 0) {
    vars_.clear();
    terms_.clear();
    return *this;
  }
  for (auto& [exps, c] : terms_) c *= factor;
  return *this;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, c] : terms_) {
    bool negative = c < 0;
    Rational magnitude = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool is_unit_monomial = std::all_of(exps.begin(), exps.end(), [](unsigned e) { return e == 0; });
    bool wrote = false;
    if (is_unit_monomial || magnitude != 1) {
      os << cyclecert::to_string(magnitude);
      wrote = true;
    }
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (wrote) os << '*';
      os << vars_[i];
      if (exps[i] > 1) os << '^' << exps[i];
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroDenominator, "polynomial division by zero");
  if (b.is_constant()) return a * Rational(1 / b.constant_term());
  Polynomial quotient;
  Polynomial rest = a;
  const auto& [lead_b_exps, lead_b_coeff] = *b.terms().begin();
  const auto& b_vars = b.vars();
  while (!rest.is_zero()) {
    const auto& [lead_exps, lead_coeff] = *rest.terms().begin();
    const auto& r_vars = rest.vars();
    // the divisor's leading monomial must divide the remainder's
    std::vector<std::pair<std::string, unsigned>> powers;
    std::map<std::string, unsigned> r_exp;
    for (std::size_t i = 0; i < r_vars.size(); ++i) r_exp[r_vars[i]] = lead_exps[i];
    for (std::size_t i = 0; i < b_vars.size(); ++i) {
      unsigned have = r_exp.count(b_vars[i]) ? r_exp[b_vars[i]] : 0;
      if (have < lead_b_exps[i]) return std::nullopt;
      r_exp[b_vars[i]] = have - lead_b_exps[i];
    }
    for (const auto& [name, e] : r_exp) {
      if (e > 0) powers.emplace_back(name, e);
    }
    Polynomial t = Polynomial::monomial(lead_coeff / lead_b_coeff, powers);
    quotient += t;
    rest -= t * b;
  }
  return quotient;
}

namespace {

Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading_coefficient());
}

Polynomial content_in(const Polynomial& p, std::string_view var) {
  Polynomial g;
  unsigned d = p.degree_in(var);
  for (unsigned k = 0; k <= d; ++k) {
    Polynomial c = p.coefficient_in(var, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::string_view var) {
  unsigned db = b.degree_in(var);
  Polynomial lb = b.leading_coefficient_in(var);
  Polynomial x = Polynomial::variable(var);
  Polynomial r = a;
  unsigned da = a.degree_in(var);
  unsigned steps = 0;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    unsigned dr = r.degree_in(var);
    Polynomial t = r.leading_coefficient_in(var) * x.pow(dr - db);
    r = lb * r - t * b;
    ++steps;
  }
  unsigned expected = da >= db ? da - db + 1 : 0;
  if (steps < expected) r *= lb.pow(expected - steps);
  return r;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  // a variable present in only one argument cannot occur in the gcd
  for (const auto& v : a.vars()) {
    if (!b.depends_on(v)) return gcd(content_in(a, v), b);
  }
  for (const auto& v : b.vars()) {
    if (!a.depends_on(v)) return gcd(a, content_in(b, v));
  }
  const std::string var = a.vars().front();
  Polynomial ca = content_in(a, var);
  Polynomial cb = content_in(b, var);
  Polynomial common = gcd(ca, cb);
  Polynomial pa = monic(*divide_exact(a, ca));
  Polynomial pb = monic(*divide_exact(b, cb));
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  Polynomial g;
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(var) == 0) {
      g = Polynomial(1);
      break;
    }
    pa = pb;
    pb = monic(*divide_exact(r, content_in(r, var)));
  }
  return monic(common * g);
}

}  // namespace cyclecert
