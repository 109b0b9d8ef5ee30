#include "cyclecert/curve_topology.hpp"

#include <sstream>

#include "cyclecert/error.hpp"

namespace cyclecert {

std::string to_string(CurveClass c) {
  switch (c) {
    case CurveClass::QuadraticInY: return "QuadraticInY";
    case CurveClass::Radial: return "Radial";
    case CurveClass::Unsupported: return "Unsupported";
  }
  return "Unsupported";
}

namespace {

struct Component {
  std::optional<std::size_t> left;   // bounding root index, none = unbounded
  std::optional<std::size_t> right;
  std::vector<std::size_t> nodes;
  bool point = false;
};

Rational between(const IntervalQ& a, const IntervalQ& b) {
  Rational x = *a.hi();
  Rational y = *b.lo();
  return x == y ? x : (x + y) / 2;
}

std::string root_text(const IntervalQ& root) {
  if (root.is_point()) return "x = " + to_string(*root.lo());
  std::ostringstream os;
  os << "x in " << root.to_string() << " (~" << to_double((*root.lo() + *root.hi()) / 2) << ")";
  return os.str();
}

CurveTopologyReport unsupported(std::string why) {
  CurveTopologyReport r;
  r.curve_class = CurveClass::Unsupported;
  r.narrative = std::move(why);
  return r;
}

}  // namespace

CurveTopologyReport analyze_quadratic_curve(const RationalFunction& V, const Region& region) {
  if (V.den().depends_on("y")) throw Error(ErrorKind::WrongDegree, "denominator of V depends on y");
  const Polynomial& num = V.num();
  if (num.degree_in("y") != 2) {
    throw Error(ErrorKind::WrongDegree, "V has degree " + std::to_string(num.degree_in("y")) + " in y, expected 2");
  }
  const IntervalQ I = region.x_extent();
  UPoly a = UPoly::from_polynomial(num.coefficient_in("y", 2), "x");
  UPoly b = UPoly::from_polynomial(num.coefficient_in("y", 1), "x");
  UPoly c = UPoly::from_polynomial(num.coefficient_in("y", 0), "x");
  if (!verdict_strict(certify_sign(a, I, SignMode::Strict).verdict)) {
    throw Error(ErrorKind::NotMonic, "leading coefficient " + a.to_string() + " of y^2 is not one-signed on " +
                                         I.to_string());
  }
  if (!V.den().is_constant()) {
    UPoly den = UPoly::from_polynomial(V.den(), "x");
    if (!verdict_strict(certify_sign(den, I, SignMode::Strict).verdict)) {
      return unsupported("denominator " + den.to_string() + " of V vanishes on " + I.to_string());
    }
  }

  CurveTopologyReport rep;
  rep.curve_class = CurveClass::QuadraticInY;
  rep.ell_region = region_ell(region);
  UPoly delta = b * b - a * c * Rational(4);
  std::ostringstream narrative;
  narrative << "discriminant in y: " << delta.to_string() << ". ";

  if (delta.degree() <= 0) {
    int s = delta.is_zero() ? 0 : sgn(delta.coeff(0));
    if (s == 0) {
      rep.unbounded_branches = 1;
      narrative << "V is a perfect square in y: one double graph y = -b/(2a), no bounded component.";
    } else if (s > 0) {
      rep.unbounded_branches = 2;
      narrative << "constant positive discriminant: two disjoint graphs, no bounded component.";
    } else {
      narrative << "constant negative discriminant: the curve is empty.";
    }
    rep.narrative = narrative.str();
    return rep;
  }

  auto roots = isolate_roots(delta).roots;
  UPoly sqf = square_free_part(delta);
  for (auto& r : roots) {
    if (r.multiplicity > 2) {
      return unsupported("discriminant " + delta.to_string() + " has a root of multiplicity " +
                         std::to_string(r.multiplicity) + " at " + root_text(r.interval) +
                         "; tangencies of order above 2 are not analysed");
    }
    r.interval = refine_root(sqf, r.interval, Rational(1, 1024));
  }

  const std::size_t m = roots.size();
  std::vector<int> seg(m + 1);
  if (m == 0) {
    seg[0] = sgn(delta(0));
  } else {
    seg[0] = sgn(delta(*roots[0].interval.lo() - 1));
    for (std::size_t k = 1; k < m; ++k) seg[k] = sgn(delta(between(roots[k - 1].interval, roots[k].interval)));
    seg[m] = sgn(delta(*roots[m - 1].interval.hi() + 1));
  }

  std::vector<Component> comps;
  for (std::size_t i = 0; i < m; ++i) {
    if (roots[i].multiplicity == 2 && seg[i] < 0 && seg[i + 1] < 0) {
      comps.push_back({i, i, {}, true});
    }
  }
  std::size_t k = 0;
  while (k <= m) {
    if (seg[k] <= 0) {
      ++k;
      continue;
    }
    Component comp;
    if (k > 0) comp.left = k - 1;
    while (k < m && roots[k].multiplicity == 2 && seg[k + 1] > 0) {
      comp.nodes.push_back(k);
      ++k;
    }
    if (k < m) comp.right = k;
    comps.push_back(comp);
    ++k;
  }

  auto inside = [&](std::size_t idx) { return root_in_interval(sqf, roots[idx].interval, I); };
  auto touches = [&](std::size_t lo_idx, std::size_t hi_idx) {
    // projection [root lo, root hi] meets I
    IntervalQ span(roots[lo_idx].interval.lo(), true, roots[hi_idx].interval.hi(), true);
    if (I.hi() && *span.lo() >= *I.hi()) return false;
    if (I.lo() && *span.hi() <= *I.lo()) return false;
    return true;
  };

  for (const auto& comp : comps) {
    if (comp.point) {
      if (inside(*comp.left)) {
        ++rep.bounded_components;
        ++rep.isolated_points;
        rep.singular_points.push_back(roots[*comp.left].interval);
        narrative << "isolated point at " << root_text(roots[*comp.left].interval) << ". ";
      }
      continue;
    }
    if (!comp.left || !comp.right) {
      ++rep.unbounded_branches;
      narrative << "unbounded branch over "
                << (comp.left ? "x > root " + root_text(roots[*comp.left].interval) : std::string("x -> -inf"))
                << (comp.right ? " up to root " + root_text(roots[*comp.right].interval) : std::string(" to x -> +inf"))
                << ". ";
      continue;
    }
    bool in = inside(*comp.left) && inside(*comp.right);
    if (!in) {
      if (touches(*comp.left, *comp.right)) {
        rep.boundary_contact = true;
        narrative << "bounded component between " << root_text(roots[*comp.left].interval) << " and "
                  << root_text(roots[*comp.right].interval) << " meets the region boundary, not counted. ";
      }
      continue;
    }
    ++rep.bounded_components;
    if (comp.nodes.empty()) {
      ++rep.smooth_ovals;
      narrative << "smooth oval over " << root_text(roots[*comp.left].interval) << " .. "
                << root_text(roots[*comp.right].interval) << ". ";
    } else {
      narrative << (comp.nodes.size() + 1) << " loops joined at singular point(s)";
      for (std::size_t n : comp.nodes) {
        rep.singular_points.push_back(roots[n].interval);
        narrative << " " << root_text(roots[n].interval);
      }
      narrative << ", spanning " << root_text(roots[*comp.left].interval) << " .. "
                << root_text(roots[*comp.right].interval) << ". ";
    }
  }
  rep.ell_curve = rep.bounded_components;
  narrative << "bounded components: " << rep.bounded_components << ", smooth ovals: " << rep.smooth_ovals
            << ", l(W,V) = " << rep.ell_curve << ".";
  rep.narrative = narrative.str();
  return rep;
}

CurveTopologyReport analyze_radial(const UPoly& w) {
  if (w.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "radial curve of the zero polynomial");
  CurveTopologyReport rep;
  rep.curve_class = CurveClass::Radial;
  std::ostringstream narrative;
  narrative << "{" << w.to_string() << " = 0}:";
  if (w.degree() > 0) {
    UPoly sqf = square_free_part(w);
    for (const auto& r : isolate_roots(w).roots) {
      if (!root_in_interval(sqf, r.interval, IntervalQ::above(0, true))) continue;
      ++rep.bounded_components;
      if (compare_root(sqf, r.interval, 0) == 0) {
        ++rep.isolated_points;
        narrative << " the origin;";
      } else {
        ++rep.smooth_ovals;
        IntervalQ fine = refine_root(sqf, r.interval, Rational(1, 1024));
        narrative << " circle of radius " << root_text(fine).substr(2) << ";";
      }
    }
  }
  if (rep.bounded_components == 0) narrative << " empty for r >= 0;";
  rep.ell_curve = rep.bounded_components;
  narrative << " l(R^2,w) = " << rep.ell_curve << ".";
  rep.narrative = narrative.str();
  return rep;
}

std::optional<UPoly> as_radial(const Polynomial& p) {
  for (const auto& v : p.vars()) {
    if (v != "x" && v != "y") return std::nullopt;
  }
  UPoly g = UPoly::from_polynomial(p.coefficient_in("y", 0), "x");
  std::vector<Rational> coeffs;
  for (int k = 0; k <= g.degree(); ++k) {
    if (k % 2 == 1) {
      if (g.coeff(static_cast<std::size_t>(k)) != 0) return std::nullopt;
    } else {
      coeffs.push_back(g.coeff(static_cast<std::size_t>(k)));
    }
  }
  UPoly W(coeffs, "u");
  Polynomial rho = Polynomial::variable("x").pow(2) + Polynomial::variable("y").pow(2);
  if (W.to_polynomial().substitute({{"u", rho}}) != p) return std::nullopt;
  return W;
}

}  // namespace cyclecert
