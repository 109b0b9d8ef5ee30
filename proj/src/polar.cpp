#include "cyclecert/polar.hpp"

#include <cmath>
#include <sstream>

#include "cyclecert/error.hpp"

namespace cyclecert {

TrigPoly TrigPoly::cos(unsigned k, const Rational& coef) {
  TrigPoly t;
  t.add_cos(k, coef);
  t.trim();
  return t;
}

TrigPoly TrigPoly::sin(unsigned k, const Rational& coef) {
  TrigPoly t;
  t.add_sin(k, coef);
  t.trim();
  return t;
}

void TrigPoly::add_cos(long k, const Rational& c) {
  if (k < 0) k = -k;
  if (k == 0) {
    const_ += c;
  } else {
    h_[static_cast<unsigned>(k)].first += c;
  }
}

void TrigPoly::add_sin(long k, const Rational& c) {
  if (k == 0) return;
  if (k < 0) {
    h_[static_cast<unsigned>(-k)].second -= c;
  } else {
    h_[static_cast<unsigned>(k)].second += c;
  }
}

void TrigPoly::trim() {
  for (auto it = h_.begin(); it != h_.end();) {
    if (it->second.first == 0 && it->second.second == 0) {
      it = h_.erase(it);
    } else {
      ++it;
    }
  }
}

TrigPoly TrigPoly::derivative() const {
  TrigPoly out;
  for (const auto& [k, ab] : h_) {
    // a cos(kt) + b sin(kt) -> -k a sin(kt) + k b cos(kt)
    out.h_[k] = {Rational(k) * ab.second, -Rational(k) * ab.first};
  }
  out.trim();
  return out;
}

Rational TrigPoly::evaluate(const Rational& c, const Rational& s) const {
  Rational value = const_;
  Rational ck = 1;
  Rational sk = 0;
  unsigned k = 0;
  for (const auto& [j, ab] : h_) {
    while (k < j) {
      Rational next_c = ck * c - sk * s;
      sk = sk * c + ck * s;
      ck = next_c;
      ++k;
    }
    value += ab.first * ck + ab.second * sk;
  }
  return value;
}

double TrigPoly::evaluate(double t) const {
  double value = to_double(const_);
  for (const auto& [k, ab] : h_) {
    value += to_double(ab.first) * std::cos(k * t) + to_double(ab.second) * std::sin(k * t);
  }
  return value;
}

Rational TrigPoly::amplitude_bound() const {
  Rational mu = const_;
  for (const auto& [k, ab] : h_) mu += abs_value(ab.first) + abs_value(ab.second);
  return mu;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  const_ += o.const_;
  for (const auto& [k, ab] : o.h_) {
    h_[k].first += ab.first;
    h_[k].second += ab.second;
  }
  trim();
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) { return *this += -o; }

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly out;
  out.const_ = a.const_ * b.const_;
  for (const auto& [k, ab] : b.h_) {
    out.add_cos(k, a.const_ * ab.first);
    out.add_sin(k, a.const_ * ab.second);
  }
  for (const auto& [j, ab] : a.h_) {
    out.add_cos(j, b.const_ * ab.first);
    out.add_sin(j, b.const_ * ab.second);
  }
  for (const auto& [j, p] : a.h_) {
    for (const auto& [k, q] : b.h_) {
      long jl = j;
      long kl = k;
      Rational half(1, 2);
      // cos cos, sin sin, sin cos, cos sin
      Rational cc = half * p.first * q.first;
      Rational ss = half * p.second * q.second;
      Rational sc = half * p.second * q.first;
      Rational cs = half * p.first * q.second;
      out.add_cos(jl - kl, cc + ss);
      out.add_cos(jl + kl, cc - ss);
      out.add_sin(jl + kl, sc + cs);
      out.add_sin(jl - kl, sc - cs);
    }
  }
  out.trim();
  return out;
}

TrigPoly operator*(TrigPoly a, const Rational& c) {
  a.const_ *= c;
  for (auto& [k, ab] : a.h_) {
    ab.first *= c;
    ab.second *= c;
  }
  a.trim();
  return a;
}

namespace {

void append_term(std::string& out, const Rational& coef, const std::string& body) {
  if (coef == 0) return;
  Rational mag = abs_value(coef);
  if (out.empty()) {
    if (coef < 0) out += "-";
  } else {
    out += coef < 0 ? " - " : " + ";
  }
  if (body.empty()) {
    out += to_string(mag);
  } else {
    if (mag != 1) out += to_string(mag) + "*";
    out += body;
  }
}

std::string angle(unsigned k) { return k == 1 ? "t" : std::to_string(k) + "*t"; }

}  // namespace

std::string TrigPoly::to_string() const {
  std::string out;
  append_term(out, const_, "");
  for (const auto& [k, ab] : h_) {
    append_term(out, ab.first, "cos(" + angle(k) + ")");
    append_term(out, ab.second, "sin(" + angle(k) + ")");
  }
  return out.empty() ? "0" : out;
}

PolarPoly PolarPoly::term(unsigned power, const TrigPoly& coef) {
  PolarPoly p;
  if (!coef.is_zero()) p.c_[power] = coef;
  return p;
}

TrigPoly PolarPoly::coeff(unsigned power) const {
  auto it = c_.find(power);
  return it == c_.end() ? TrigPoly() : it->second;
}

void PolarPoly::trim() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second.is_zero()) {
      it = c_.erase(it);
    } else {
      ++it;
    }
  }
}

PolarPoly PolarPoly::derivative_r() const {
  PolarPoly out;
  for (const auto& [i, t] : c_) {
    if (i > 0) out.c_[i - 1] = t * Rational(i);
  }
  out.trim();
  return out;
}

PolarPoly PolarPoly::derivative_theta() const {
  PolarPoly out;
  for (const auto& [i, t] : c_) out.c_[i] = t.derivative();
  out.trim();
  return out;
}

PolarPoly PolarPoly::divide_r(unsigned k) const {
  PolarPoly out;
  for (const auto& [i, t] : c_) {
    if (i < k) throw Error(ErrorKind::NotPolynomial, "division by r^" + std::to_string(k) + " is not exact");
    out.c_[i - k] = t;
  }
  return out;
}

PolarPoly PolarPoly::multiply_r(unsigned k) const {
  PolarPoly out;
  for (const auto& [i, t] : c_) out.c_[i + k] = t;
  return out;
}

Rational PolarPoly::evaluate(const Rational& r, const Rational& c, const Rational& s) const {
  Rational value = 0;
  for (const auto& [i, t] : c_) value += t.evaluate(c, s) * pow(r, i);
  return value;
}

double PolarPoly::evaluate(double r, double t) const {
  double value = 0;
  for (const auto& [i, tp] : c_) value += tp.evaluate(t) * std::pow(r, static_cast<double>(i));
  return value;
}

PolarPoly& PolarPoly::operator+=(const PolarPoly& o) {
  for (const auto& [i, t] : o.c_) c_[i] += t;
  trim();
  return *this;
}

PolarPoly& PolarPoly::operator-=(const PolarPoly& o) {
  for (const auto& [i, t] : o.c_) c_[i] -= t;
  trim();
  return *this;
}

PolarPoly operator*(const PolarPoly& a, const PolarPoly& b) {
  PolarPoly out;
  for (const auto& [i, s] : a.c_) {
    for (const auto& [j, t] : b.c_) out.c_[i + j] += s * t;
  }
  out.trim();
  return out;
}

PolarPoly operator*(PolarPoly a, const Rational& c) {
  for (auto& [i, t] : a.c_) t = t * c;
  a.trim();
  return a;
}

PolarPoly operator*(const PolarPoly& a, const UPoly& radial) {
  PolarPoly out;
  for (const auto& [i, t] : a.c_) {
    for (std::size_t k = 0; k < radial.coeffs().size(); ++k) {
      if (radial.coeffs()[k] != 0) out.c_[i + static_cast<unsigned>(k)] += t * radial.coeffs()[k];
    }
  }
  out.trim();
  return out;
}

std::string PolarPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.to_string() + ")";
    if (it->first == 1) out += "*r";
    if (it->first > 1) out += "*r^" + std::to_string(it->first);
  }
  return out;
}

std::pair<PolarPoly, PolarPoly> to_polar(const SystemDef& sys_in) {
  SystemDef sys = sys_in.bound();
  if (!sys.P.is_polynomial() || !sys.Q.is_polynomial()) {
    throw Error(ErrorKind::NotPolynomial, "the polar method needs polynomial P and Q");
  }
  const Polynomial& P = sys.P.as_polynomial();
  const Polynomial& Q = sys.Q.as_polynomial();
  if (P.constant_term() != 0 || Q.constant_term() != 0) {
    throw Error(ErrorKind::NonzeroAtOrigin, "the origin is not a critical point: P(0,0) = " +
                                                to_string(P.constant_term()) + ", Q(0,0) = " +
                                                to_string(Q.constant_term()));
  }
  std::vector<TrigPoly> cos_pow{TrigPoly(1)};
  std::vector<TrigPoly> sin_pow{TrigPoly(1)};
  auto power = [](std::vector<TrigPoly>& cache, unsigned e, const TrigPoly& base) -> const TrigPoly& {
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  const TrigPoly c1 = TrigPoly::cos(1);
  const TrigPoly s1 = TrigPoly::sin(1);
  auto polar = [&](const Polynomial& f) {
    PolarPoly out;
    const auto& vars = f.vars();
    for (const auto& [e, coef] : f.terms()) {
      unsigned i = 0;
      unsigned j = 0;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        if (vars[k] == "x") i = e[k];
        if (vars[k] == "y") j = e[k];
      }
      TrigPoly t = power(cos_pow, i, c1) * power(sin_pow, j, s1) * coef;
      out += PolarPoly::term(i + j, t);
    }
    return out;
  };
  PolarPoly p = polar(P);
  PolarPoly q = polar(Q);
  PolarPoly cos_t = PolarPoly::term(0, c1);
  PolarPoly sin_t = PolarPoly::term(0, s1);
  PolarPoly R = cos_t * p + sin_t * q;
  PolarPoly Theta = (cos_t * q - sin_t * p).divide_r(1);
  return {R, Theta};
}

UPoly radial_average(const PolarPoly& R) {
  std::vector<Rational> coeffs;
  for (const auto& [i, t] : R.coeffs()) {
    if (t.constant() == 0) continue;
    if (i % 2 == 0) {
      throw Error(ErrorKind::ParityViolation, "average of the r^" + std::to_string(i) + " coefficient is " +
                                                  to_string(t.constant()) + ", expected 0");
    }
    std::size_t k = (i - 1) / 2;
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] = t.constant();
  }
  return UPoly(coeffs, "u");
}

PolarMs polar_ms(const SystemDef& sys, const Rational& s) {
  PolarMs out;
  std::tie(out.R, out.Theta) = to_polar(sys);
  out.p = radial_average(out.R);
  // w(r) = r^2 p'(r^2)
  out.w = (out.p.derivative().renamed("r").compose_square()) * UPoly::monomial(1, 2, "r");
  PolarPoly divergence = out.R.derivative_r() + out.Theta.derivative_theta() + out.R.divide_r(1);
  out.M = out.R * out.w.derivative() + divergence * out.w * s;
  return out;
}

UPoly mu_bounds(const PolarPoly& M, std::map<unsigned, Rational>* mu) {
  std::vector<Rational> coeffs;
  for (const auto& [i, t] : M.coeffs()) {
    Rational b = t.amplitude_bound();
    if (mu) (*mu)[i] = b;
    if (coeffs.size() <= i) coeffs.resize(i + 1);
    coeffs[i] = b;
  }
  return UPoly(coeffs, "r");
}

PolarCertificate certify_polar(const SystemDef& sys, const Rational& s, bool unique_critical_point) {
  PolarMs ms = polar_ms(sys, s);
  if (ms.w.is_zero()) throw Error(ErrorKind::ZeroW, "w(r) = r^2 p'(r^2) vanishes identically (p = " + ms.p.to_string() + ")");
  PolarCertificate cert;
  cert.s = s;
  cert.p = ms.p;
  cert.w = ms.w;
  cert.d = ms.w.degree();
  cert.M = ms.M;
  cert.phi = mu_bounds(ms.M, &cert.mu);
  UPoly sqf = square_free_part(ms.w);
  for (const auto& r : isolate_roots(ms.w).roots) {
    if (root_in_interval(sqf, r.interval, IntervalQ::above(0, true))) ++cert.n_plus;
  }
  cert.phi_sign = certify_sign(cert.phi, IntervalQ::above(0), SignMode::Strict);
  if (cert.phi_sign.verdict != SignVerdict::StrictlyNegative) {
    cert.note = "Phi is not certified negative on (0, inf): " +
                (cert.phi_sign.evidence.note.empty() ? to_string(cert.phi_sign.verdict) : cert.phi_sign.evidence.note);
    return cert;
  }
  if (s < 0) {
    cert.bound = static_cast<int>(cert.n_plus);
    std::ostringstream os;
    os << "M_s <= Phi < 0 for r > 0: at most " << cert.n_plus
       << " limit cycle(s), all hyperbolic; each lies in an annulus between consecutive circles of {w = 0}"
       << " (or outside the largest one).";
    cert.note = os.str();
  } else {
    cert.bound = 0;
    cert.note = "M_s <= Phi < 0 for r > 0 with s >= 0: no limit cycles.";
  }
  if (unique_critical_point) {
    std::ostringstream os;
    os << "if the origin is the only critical point (asserted by the user, not verified) there are at least "
       << (cert.n_plus >= 2 ? cert.n_plus - 2 : 0) << " limit cycles with alternating stability.";
    cert.lower_bound_note = os.str();
  }
  return cert;
}

}  // namespace cyclecert
