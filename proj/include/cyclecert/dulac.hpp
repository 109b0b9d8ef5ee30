#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclecert/curve_topology.hpp"
#include "cyclecert/system.hpp"

namespace cyclecert {

struct DulacCandidate {
  RationalFunction V;
  Rational s;
};

/// V_x P + V_y Q + s (P_x + Q_y) V
RationalFunction compute_ms(const SystemDef& sys, const DulacCandidate& cand);

/// <grad D, X> + D div X
RationalFunction compute_div_dx(const SystemDef& sys, const RationalFunction& D);

/// div(x^A y^B X) / (x^A y^B) = A P/x + B Q/y + div X, for rational exponents.
RationalFunction monomial_weight_divergence(const SystemDef& sys, const Rational& A, const Rational& B);

/// Sign of a function of (x, y) on a region, assembled from univariate
/// certificates. `factors` holds every univariate certificate with a label
/// saying how it enters (product factor or summand).
struct TwoVariableSignEvidence {
  std::string shape;
  SignVerdict verdict = SignVerdict::Indeterminate;
  std::vector<std::pair<std::string, SignCertificate>> factors;
  std::string zero_set;
  std::string note;
};

/// Accepted shapes (after pulling out the monomial content x^a y^b):
/// a constant; univariate in x or y; W(x^2 + y^2) with no zero at
/// x^2 + y^2 > 0; a sum of at most 4 terms u_j(x) y^j (or v_j(y) x^j).
/// Throws UnsupportedShape otherwise. Parameters must be bound.
TwoVariableSignEvidence certify_two_variable(const Polynomial& f, const Region& region);

/// Numerator times denominator; the denominator must be strictly signed.
TwoVariableSignEvidence certify_two_variable(const RationalFunction& f, const Region& region);

enum class BoundKind { NoCycles, AtMost };

std::string to_string(BoundKind kind);

struct DulacCertificate {
  DulacCandidate candidate;
  RationalFunction m_s;
  TwoVariableSignEvidence sign;
  CurveTopologyReport topology;
  Region region = Region::plane();
  std::optional<int> bound;
  std::optional<BoundKind> bound_kind;
  int cycles_outside = 0;   // cycles not meeting {V=0}
  int cycles_on_curve = 0;  // cycles contained in {V=0}
  std::string stability_note;

  bool certified() const { return bound.has_value(); }
};

/// Full Dulac pipeline. Never returns a bound unless the sign of M_s is
/// certified. Errors: UnboundParameter, UnsupportedShape,
/// TopologyUnsupported (only when s < 0, where the topology is needed).
DulacCertificate certify_direct(const SystemDef& sys, const DulacCandidate& cand, const Region& region);

}  // namespace cyclecert
