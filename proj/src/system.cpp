#include "cyclecert/system.hpp"

#include <algorithm>

#include "cyclecert/error.hpp"

namespace cyclecert {

RationalFunction bind_params(const RationalFunction& f, const std::map<std::string, Rational>& params) {
  RationalFunction out = f.bind(params);
  for (const auto& v : out.vars()) {
    if (v != "x" && v != "y") throw Error(ErrorKind::UnboundParameter, "parameter '" + v + "' has no value");
  }
  return out;
}

SystemDef SystemDef::bound() const {
  return SystemDef{bind_params(P, params), bind_params(Q, params), {}};
}

unsigned SystemDef::degree() const {
  SystemDef b = bound();
  return std::max(b.P.num().total_degree(), b.Q.num().total_degree());
}

RationalFunction SystemDef::divergence() const { return P.derivative("x") + Q.derivative("y"); }

Region Region::strip(const IntervalQ& interval) {
  return Region(Kind::Strip, IntervalQ(interval.lo(), false, interval.hi(), false), 1, 1);
}

Region Region::quadrant(int sx, int sy) {
  if ((sx != 1 && sx != -1) || (sy != 1 && sy != -1)) {
    throw Error(ErrorKind::SchemaError, "quadrant signs must be +1 or -1");
  }
  return Region(Kind::OpenQuadrant, IntervalQ::real_line(), sx, sy);
}

namespace {
IntervalQ half_line(int sign) { return sign > 0 ? IntervalQ::above(0) : IntervalQ::below(0); }
}  // namespace

IntervalQ Region::x_extent() const {
  switch (kind_) {
    case Kind::Plane: return IntervalQ::real_line();
    case Kind::Strip: return strip_;
    case Kind::OpenQuadrant: return half_line(sx_);
  }
  return IntervalQ::real_line();
}

IntervalQ Region::y_extent() const {
  if (kind_ == Kind::OpenQuadrant) return half_line(sy_);
  return IntervalQ::real_line();
}

std::string Region::describe() const {
  switch (kind_) {
    case Kind::Plane: return "plane";
    case Kind::Strip: return "strip " + strip_.to_string() + " x R";
    case Kind::OpenQuadrant:
      return std::string("open quadrant (") + (sx_ > 0 ? "+" : "-") + ", " + (sy_ > 0 ? "+" : "-") + ")";
  }
  return "";
}

int region_ell(const Region&) { return 0; }

}  // namespace cyclecert
