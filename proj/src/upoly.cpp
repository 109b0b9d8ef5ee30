#include "cyclecert/upoly.hpp"

#include "cyclecert/error.hpp"

namespace cyclecert {

UPoly::UPoly(std::vector<Rational> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) { trim(); }

UPoly UPoly::monomial(const Rational& c, unsigned degree, std::string var) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return UPoly(std::move(coeffs), std::move(var));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_polynomial(const Polynomial& p, std::string_view var) {
  for (const auto& v : p.vars()) {
    if (v != var) {
      throw Error(ErrorKind::UnboundParameter,
                  "expected a polynomial in " + std::string(var) + " only, but '" + v + "' occurs in " + p.to_string());
    }
  }
  std::vector<Rational> coeffs(p.degree_in(var) + 1, Rational(0));
  for (const auto& [exps, c] : p.terms()) coeffs[exps.empty() ? 0 : exps[0]] = c;
  return UPoly(std::move(coeffs), std::string(var));
}

UPoly UPoly::from_polynomial(const Polynomial& p) {
  if (p.vars().size() > 1) {
    std::string names;
    for (const auto& v : p.vars()) names += (names.empty() ? "" : ", ") + v;
    throw Error(ErrorKind::UnboundParameter, "expected a univariate polynomial, variables: " + names);
  }
  return from_polynomial(p, p.vars().empty() ? std::string("x") : p.vars().front());
}

Polynomial UPoly::to_polynomial() const {
  Polynomial out;
  Polynomial x = Polynomial::variable(var_);
  Polynomial power(Rational(1));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) out += power * c_[k];
    if (k + 1 < c_.size()) power *= x;
  }
  return out;
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UPoly::evaluate(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

int UPoly::sign_at_infinity(bool positive) const {
  if (c_.empty()) return 0;
  int s = sgn(c_.back());
  if (!positive && degree() % 2 == 1) s = -s;
  return s;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly({}, var_);
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return UPoly(std::move(d), var_);
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * Rational(1 / c_.back());
}

UPoly UPoly::compose_square() const {
  if (c_.empty()) return *this;
  std::vector<Rational> d(2 * c_.size() - 1, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) d[2 * k] = c_[k];
  return UPoly(std::move(d), var_);
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) { return *this += -o; }

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return UPoly({}, a.var_);
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out), a.var_);
}

UPoly operator*(UPoly a, const Rational& c) {
  for (auto& x : a.c_) x *= c;
  a.trim();
  return a;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroDenominator, "univariate division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UPoly({}, a.var()), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational inv = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] * inv;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(quo), a.var()), UPoly(std::move(rem), a.var())};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

SquareFreeDecomposition square_free_decomposition(const UPoly& p) {
  SquareFreeDecomposition out;
  if (p.is_zero()) {
    out.content = 0;
    return out;
  }
  out.content = p.leading();
  UPoly f = p.monic();
  if (f.degree() == 0) return out;
  UPoly fp = f.derivative();
  UPoly a = gcd(f, fp);
  UPoly b = exact_quotient(f, a);
  UPoly c = exact_quotient(fp, a);
  UPoly d = c - b.derivative();
  unsigned m = 1;
  while (b.degree() > 0) {
    UPoly g = gcd(b, d);
    if (g.degree() > 0) out.factors.emplace_back(g, m);
    UPoly nb = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - nb.derivative();
    b = std::move(nb);
    ++m;
  }
  return out;
}

UPoly square_free_part(const UPoly& p) {
  if (p.is_zero()) return p;
  UPoly f = p.monic();
  if (f.degree() <= 0) return UPoly::constant(1, p.var());
  return exact_quotient(f, gcd(f, f.derivative())).monic();
}

}  // namespace cyclecert
