#include "cyclecert/rational_function.hpp"

#include <ostream>

#include "cyclecert/error.hpp"

namespace cyclecert {

RationalFunction::RationalFunction(const Polynomial& num) : num_(num), den_(Rational(1)) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZeroDenominator, "denominator is identically zero");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  Rational lead = den_.leading_coefficient();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

const Polynomial& RationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw Error(ErrorKind::NotPolynomial, to_string() + " is not a polynomial");
  return num_;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_);
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroDenominator, "division by the zero function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::operator-() const { return {Raw{}, -num_, den_}; }

RationalFunction RationalFunction::inverse() const { return RationalFunction(Rational(1)) / *this; }

RationalFunction RationalFunction::pow(unsigned exponent) const {
  // lowest terms are preserved by powers
  return {Raw{}, num_.pow(exponent), den_.pow(exponent)};
}

RationalFunction RationalFunction::derivative(std::string_view var) const {
  if (is_polynomial()) return RationalFunction(num_.derivative(var));
  return {num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_};
}

namespace {

// Image of p under bindings as numerator over prod d_i^{deg_i p}.
struct Cleared {
  Polynomial num;
  std::map<std::string, unsigned> degrees;
};

Cleared clear_denominators(const Polynomial& p, const std::map<std::string, RationalFunction>& bindings) {
  Cleared out;
  const auto& vars = p.vars();
  // simultaneous substitution: each term c * prod v^e maps to
  // c * prod num_v^e * den_v^(deg_v - e)
  struct Slot {
    const RationalFunction* image = nullptr;
    unsigned degree = 0;
    std::vector<Polynomial> num_pow;
    std::vector<Polynomial> den_pow;
  };
  std::vector<Slot> slots(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = bindings.find(vars[i]);
    if (it == bindings.end()) continue;
    slots[i].image = &it->second;
    slots[i].degree = it->second.is_polynomial() ? 0 : p.degree_in(vars[i]);
    if (slots[i].degree > 0) out.degrees[vars[i]] = slots[i].degree;
  }
  auto power = [](std::vector<Polynomial>& cache, const Polynomial& base, unsigned k) -> const Polynomial& {
    if (cache.empty()) cache.push_back(Polynomial(Rational(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * base);
    return cache[k];
  };
  for (const auto& [exps, c] : p.terms()) {
    Polynomial term(c);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      Slot& slot = slots[i];
      if (slot.image == nullptr) {
        if (exps[i] > 0) term *= Polynomial::variable(vars[i]).pow(exps[i]);
        continue;
      }
      if (exps[i] > 0) term *= power(slot.num_pow, slot.image->num(), exps[i]);
      if (slot.degree > exps[i]) term *= power(slot.den_pow, slot.image->den(), slot.degree - exps[i]);
    }
    out.num += term;
  }
  return out;
}

}  // namespace

RationalFunction RationalFunction::substitute(const std::map<std::string, RationalFunction>& bindings) const {
  Cleared n = clear_denominators(num_, bindings);
  Cleared d = clear_denominators(den_, bindings);
  Polynomial top = n.num;
  Polynomial bottom = d.num;
  // balance the cleared denominators: n/prod d^a over m/prod d^b
  for (const auto& [name, f] : bindings) {
    unsigned a = n.degrees.count(name) ? n.degrees.at(name) : 0;
    unsigned b = d.degrees.count(name) ? d.degrees.at(name) : 0;
    if (b > a) top *= f.den().pow(b - a);
    if (a > b) bottom *= f.den().pow(a - b);
  }
  if (bottom.is_zero()) {
    throw Error(ErrorKind::DivisionByZeroDenominator, "substitution makes the denominator of " + to_string() + " vanish");
  }
  return {top, bottom};
}

RationalFunction RationalFunction::bind(const std::map<std::string, Rational>& values) const {
  std::map<std::string, RationalFunction> bindings;
  for (const auto& [name, v] : values) {
    if (depends_on(name)) bindings.emplace(name, RationalFunction(v));
  }
  if (bindings.empty()) return *this;
  return substitute(bindings);
}

Rational RationalFunction::evaluate(const std::map<std::string, Rational>& values) const {
  Rational d = den_.evaluate(values);
  if (d == 0) throw Error(ErrorKind::DivisionByZeroDenominator, "pole of " + to_string());
  return num_.evaluate(values) / d;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace cyclecert
