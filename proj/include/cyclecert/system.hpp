#pragma once

#include <map>
#include <string>

#include "cyclecert/rational_function.hpp"
#include "cyclecert/real_roots.hpp"

namespace cyclecert {

/// Planar field x' = P, y' = Q. Parameters are ordinary variables of P and Q
/// until bound() substitutes their values.
struct SystemDef {
  RationalFunction P;
  RationalFunction Q;
  std::map<std::string, Rational> params;

  /// P and Q with params substituted; throws UnboundParameter if any name
  /// other than x, y remains.
  SystemDef bound() const;
  /// Max total degree of the numerators of the bound P and Q.
  unsigned degree() const;
  RationalFunction divergence() const;
};

/// Substitutes params into f and checks that only x and y remain.
RationalFunction bind_params(const RationalFunction& f, const std::map<std::string, Rational>& params);

/// Simply connected open regions: the plane, a vertical strip I x R, or an
/// open quadrant.
class Region {
 public:
  enum class Kind { Plane, Strip, OpenQuadrant };

  static Region plane() { return Region(Kind::Plane, IntervalQ::real_line(), 1, 1); }
  /// The interval is made open.
  static Region strip(const IntervalQ& interval);
  /// sx, sy in {+1, -1}
  static Region quadrant(int sx, int sy);

  Kind kind() const { return kind_; }
  IntervalQ x_extent() const;
  IntervalQ y_extent() const;
  int sx() const { return sx_; }
  int sy() const { return sy_; }
  std::string describe() const;

 private:
  Region(Kind kind, IntervalQ strip, int sx, int sy) : kind_(kind), strip_(std::move(strip)), sx_(sx), sy_(sy) {}
  Kind kind_;
  IntervalQ strip_;
  int sx_;
  int sy_;
};

/// Number of holes of the region; 0 for every supported kind.
int region_ell(const Region& region);

}  // namespace cyclecert
