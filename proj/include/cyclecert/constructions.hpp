#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclecert/dulac.hpp"

namespace cyclecert {

/// A candidate (V, s) for a source system together with its M.
/// compute_ms(system, (V, s)) == M * cofactor.
struct ConstructionResult {
  SystemDef system;
  RationalFunction V;
  Rational s;
  RationalFunction M;
  RationalFunction cofactor = Rational(1);
  std::string notes;
};

/// x' = y - F(x), y' = -g(x)
struct LienardSpec {
  RationalFunction F;
  Polynomial g;
  Rational s;
  Rational c0 = 0;
  Rational c1 = 0;
};

/// G(x) = integral of g from 0 to x.
Polynomial antiderivative_from_zero(const Polynomial& g);

/// Closed-form V_2 and M_{s,2}(x) for generalized Lienard systems.
ConstructionResult lienard_v2(const LienardSpec& spec);

/// Outcome of the polynomial-ansatz cascade for x' = p0 + p1 y,
/// y' = q0 + q1 y + q2 y^2.
struct MtRecurrenceResult {
  bool found = false;
  std::string failed_step;           // e.g. "y^3 row (v_2)"
  std::vector<Polynomial> family;    // basis of all ansatz V with M free of y
  std::optional<ConstructionResult> representative;
};

/// Errors: WrongShape when the system is not of the form above with p1 != 0,
/// or P, Q are not polynomial.
MtRecurrenceResult mt_recurrence(const SystemDef& sys, const Rational& s, unsigned n, unsigned degree_cap);

struct SecondMethodResult {
  Polynomial v0, v1, v2;
  Polynomial V2;        // v0 + v1 y + v2 y^2
  Polynomial M2;        // v1 h0 - (2/3) h1 v0
  Polynomial residual;  // y-coefficient of M^{[2]}; zero for a valid construction
};

/// x' = y, y' = h0 + h1 y + h2 y^2 + y^3 with s = -2/3 and a candidate v2.
SecondMethodResult second_method_derive(const Polynomial& h0, const Polynomial& h1, const Polynomial& h2,
                                        const Polynomial& v2);

/// x' = x (g0 + g1 y), y' = y (h0 + h1 y + h2 y^2) on I x (0, inf).
struct KolmogorovSpec {
  Polynomial g0, g1, h0, h1, h2;
  Rational lambda;
  IntervalQ interval = IntervalQ::above(0);
};

struct KolmogorovResult {
  Polynomial S;
  Polynomial T;
  SignCertificate certificate;  // on S*T, or on S or T alone when the other vanishes
  std::string certified_function;
  bool no_periodic_orbits = false;
  std::string notes;
};

SystemDef kolmogorov_system(const KolmogorovSpec& spec);

/// Errors: ZeroG1.
KolmogorovResult kolmogorov_check(const KolmogorovSpec& spec);

struct MasseraResult {
  ConstructionResult construction;  // V, s = -1, M = u(x) y^2
  RationalFunction u;               // f + 2 G (f/g)'
  SignCertificate certificate;      // on u over the interval
  CurveTopologyReport topology;
  std::optional<int> bound;         // at most one periodic orbit inside the strip
  std::string notes;
};

/// x' = y, y' = -f(x) y - g(x) on the strip I x R.
/// Errors: GOriginViolation.
MasseraResult massera_check(const Polynomial& f, const Polynomial& g, const IntervalQ& interval);

enum class LotkaVolterraOutcome { NoLimitCycles, Integrable, Degenerate };

std::string to_string(LotkaVolterraOutcome o);

struct LotkaVolterraResult {
  LotkaVolterraOutcome outcome = LotkaVolterraOutcome::Degenerate;
  std::optional<Rational> A, B, R;
  std::string explanation;
};

/// x' = x (a x + b y + c), y' = y (d x + e y + f)
SystemDef lotka_volterra_system(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                const Rational& e, const Rational& f);

LotkaVolterraResult lotka_volterra_dulac(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                         const Rational& e, const Rational& f);

/// Basis of the right nullspace of a dense rational matrix (reduced echelon
/// form, one vector per free column).
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, std::size_t columns);

}  // namespace cyclecert
