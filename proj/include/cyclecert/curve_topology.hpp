#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclecert/system.hpp"

namespace cyclecert {

enum class CurveClass { QuadraticInY, Radial, Unsupported };

std::string to_string(CurveClass c);

struct CurveTopologyReport {
  CurveClass curve_class = CurveClass::Unsupported;
  int bounded_components = 0;
  int smooth_ovals = 0;  // c(W,V)
  int isolated_points = 0;
  int unbounded_branches = 0;
  std::vector<IntervalQ> singular_points;  // x-locations
  int ell_region = 0;                      // l(W)
  int ell_curve = 0;                       // l(W,V)
  bool boundary_contact = false;
  std::string narrative;
};

/// Topology of {V = 0} for V of degree 2 in y with leading coefficient a(x)
/// of constant sign on the region's x-extent (only the numerator of a
/// rational V matters; its denominator must be free of y).
/// Errors: WrongDegree, NotMonic (a(x) not certifiably one-signed).
CurveTopologyReport analyze_quadratic_curve(const RationalFunction& V, const Region& region);

/// {w(r) = 0} for a polynomial w in r: the origin (if w(0) = 0) and one circle
/// per positive root. ell_curve = number of distinct nonnegative roots.
/// Throws ZeroPolynomial.
CurveTopologyReport analyze_radial(const UPoly& w);

/// If p(x, y) = W(x^2 + y^2) returns W (in the variable "u").
std::optional<UPoly> as_radial(const Polynomial& p);

}  // namespace cyclecert
