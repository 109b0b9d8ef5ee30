#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "cyclecert/error.hpp"
#include "cyclecert/real_roots.hpp"

using namespace cyclecert;
using namespace testing_support;

namespace {

UPoly deflate(UPoly p, const IsolatedRoot& root) {
  // divide by the minimal factor carrying this root: only possible exactly for
  // rational roots; otherwise divide by the square-free factor containing it
  auto sfd = square_free_decomposition(p);
  for (const auto& [factor, m] : sfd.factors) {
    bool hit = root.interval.is_point() ? factor(*root.interval.lo()) == 0 : sturm_count(factor, root.interval) == 1;
    if (hit) {
      for (unsigned k = 0; k < root.multiplicity; ++k) p = exact_quotient(p, factor);
      return p;
    }
  }
  return p;
}

}  // namespace

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count(upoly("x^2 - 1"), IntervalQ::above(0)) == 1);
  CHECK(sturm_count(upoly("r^2*(2*r^2 - 3)", "r"), IntervalQ::above(0, true)) == 2);
  CHECK(sturm_count(upoly("x^2 + 1"), IntervalQ::real_line()) == 0);
  // endpoint roots are deflated and counted only on closed ends
  CHECK(sturm_count(upoly("x^2 - 1"), IntervalQ::closed(-1, 1)) == 2);
  CHECK(sturm_count(upoly("x^2 - 1"), IntervalQ::open(-1, 1)) == 0);
  CHECK(sturm_count(upoly("x^2 - 1"), IntervalQ(Rational(-1), true, Rational(1), false)) == 1);
  CHECK_THROWS_AS(sturm_count(UPoly(), IntervalQ::real_line()), Error);
  CHECK_THROWS_AS(sturm_count(poly("x + y"), IntervalQ::real_line()), Error);
}

TEST_CASE("isolate_roots examples") {
  auto r = isolate_roots(upoly("x^2*(x-1)"));
  REQUIRE(r.total_distinct == 2);
  CHECK(r.roots[0].interval.contains(0));
  CHECK(r.roots[0].multiplicity == 2);
  CHECK(r.roots[1].interval.contains(1));
  CHECK(r.roots[1].multiplicity == 1);
  CHECK(isolate_roots(upoly("5")).roots.empty());
  CHECK_THROWS_AS(isolate_roots(UPoly()), Error);
}

TEST_CASE("isolate_roots on the figure-eight discriminant") {
  UPoly delta = upoly("x^2*((x^4 + x^2 - 4)^2 - 4)");
  // independent factorization: x^2 (x^4+x^2-6)(x^4+x^2-2) = x^2 (x^2-2)(x^2+3)(x^2-1)(x^2+2)
  CHECK(delta == upoly("x^2*(x^2-2)*(x^2+3)*(x^2-1)*(x^2+2)"));
  auto report = isolate_roots(delta);
  REQUIRE(report.total_distinct == 5);
  UPoly sqf = square_free_part(delta);
  std::vector<std::pair<UPoly, unsigned>> expected_factor{
      {upoly("x^2 - 2"), 1}, {upoly("x + 1"), 1}, {upoly("x"), 2}, {upoly("x - 1"), 1}, {upoly("x^2 - 2"), 1}};
  std::vector<int> sign{-1, -1, 0, 1, 1};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& root = report.roots[i];
    CHECK(root.multiplicity == expected_factor[i].second);
    CHECK(sturm_count(expected_factor[i].first, root.interval) == 1);
    int s = root.interval.is_point() ? sgn(*root.interval.lo())
                                     : (*root.interval.hi() <= 0 ? -1 : (*root.interval.lo() >= 0 ? 1 : 0));
    CHECK(s == sign[i]);
  }
}

TEST_CASE("property: Sturm counts match the bisection oracle") {
  Rng rng(2001);
  const Rational lo(-100);
  const Rational hi(100);
  for (int trial = 0; trial < 500; ++trial) {
    UPoly p = rng.upoly(static_cast<int>(rng.integer(1, 8)));
    UPoly sqf = square_free_part(p);
    auto oracle = oracle_roots(sqf, lo, hi);
    std::size_t count = sturm_count(p, IntervalQ::open(lo, hi));
    CHECK_MESSAGE(count == oracle.size(), p.to_string());
    CHECK(isolate_roots(p).total_distinct == count);
  }
}

TEST_CASE("property: multiplicity conservation and deflation") {
  Rng rng(2002);
  for (int trial = 0; trial < 150; ++trial) {
    // product of random linear and quadratic factors with repeats
    UPoly p = UPoly::constant(rng.nonzero_rational());
    int factors = static_cast<int>(rng.integer(1, 4));
    for (int k = 0; k < factors; ++k) {
      UPoly f = rng.integer(0, 1) ? UPoly({rng.rational(), Rational(1)}) : rng.upoly(2, 5);
      for (long e = rng.integer(1, 3); e > 0; --e) p = p * f;
    }
    auto report = isolate_roots(p);
    unsigned total = 0;
    for (const auto& r : report.roots) total += r.multiplicity;
    // real roots with multiplicity never exceed the degree
    CHECK(total <= static_cast<unsigned>(p.degree()));
    for (const auto& r : report.roots) {
      UPoly d = deflate(p, r);
      CHECK(d.degree() < p.degree());
      if (d.degree() > 0) {
        CHECK(sturm_count(d, r.interval) == 0);
      }
    }
    // pairwise disjoint, ascending
    for (std::size_t i = 1; i < report.roots.size(); ++i) {
      CHECK(*report.roots[i - 1].interval.hi() <= *report.roots[i].interval.lo());
    }
  }
}

TEST_CASE("certify_sign examples") {
  auto neg = certify_sign(upoly("-(x^2 + 1)"), IntervalQ::real_line(), SignMode::Strict);
  CHECK(neg.verdict == SignVerdict::StrictlyNegative);
  CHECK(neg.evidence.sturm.count == 0);
  auto vdp = certify_sign(upoly("2*(x^2 - 1)^2"), IntervalQ::real_line(), SignMode::ZeroMeasure);
  CHECK(vdp.verdict == SignVerdict::NonNegativeZeroMeasure);
  REQUIRE(vdp.evidence.zeros.size() == 2);
  CHECK(vdp.evidence.zeros[0].interval.contains(-1));
  CHECK(vdp.evidence.zeros[1].interval.contains(1));
  CHECK(certify_sign(upoly("x^2 - 1"), IntervalQ::real_line(), SignMode::Strict).verdict ==
        SignVerdict::Indeterminate);
  CHECK(certify_sign(upoly("x^2 - 1"), IntervalQ::above(1), SignMode::Strict).verdict ==
        SignVerdict::StrictlyPositive);
  CHECK(certify_sign(upoly("x^3"), IntervalQ::real_line(), SignMode::ZeroMeasure).verdict ==
        SignVerdict::Indeterminate);
  CHECK(certify_sign(UPoly(), IntervalQ::real_line(), SignMode::ZeroMeasure).verdict == SignVerdict::Indeterminate);
  CHECK(certify_sign(upoly("x^2"), IntervalQ::above(0), SignMode::Strict).verdict == SignVerdict::StrictlyPositive);
}

TEST_CASE("property: certify_sign soundness") {
  Rng rng(2003);
  int decided = 0;
  for (int trial = 0; trial < 120; ++trial) {
    UPoly p = rng.upoly(static_cast<int>(rng.integer(0, 6)), 6);
    if (rng.integer(0, 2) == 0) p = p * p;
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    if (rng.integer(0, 1)) lo = rng.rational(5, 3);
    if (rng.integer(0, 1)) hi = (lo ? *lo : Rational(-5)) + frac(rng.integer(1, 8), rng.integer(1, 3));
    IntervalQ interval(lo, false, hi, false);
    for (SignMode mode : {SignMode::Strict, SignMode::ZeroMeasure}) {
      auto cert = certify_sign(p, interval, mode);
      if (cert.verdict == SignVerdict::Indeterminate) continue;
      ++decided;
      int s = verdict_sign(cert.verdict);
      bool strict = verdict_strict(cert.verdict);
      for (int k = 0; k < 1000; ++k) {
        Rational t(rng.integer(1, 999), 1000);
        Rational x = lo && hi ? *lo + (*hi - *lo) * t
                     : lo     ? *lo + frac(rng.integer(1, 100000), rng.integer(1, 1000))
                     : hi     ? *hi - frac(rng.integer(1, 100000), rng.integer(1, 1000))
                              : frac(rng.integer(-100000, 100000), rng.integer(1, 1000));
        int v = sgn(p(x));
        if (strict) {
          CHECK(v == s);
        } else {
          CHECK(v * s >= 0);
        }
      }
    }
  }
  CHECK(decided > 40);
}

TEST_CASE("discriminant_y examples") {
  CHECK(discriminant_y(rf("y^2 + x^2 - 1")) == rf("4 - 4*x^2"));
  RationalFunction F = rf("x*(1 - x^2)/(1 + x^2)");
  RationalFunction V = rf("y^2") - F * rf("y") + rf("x^2");
  CHECK(discriminant_y(V) == rf("-x^2*(x^2 + 3)*(3*x^2 + 1)/(1 + x^2)^2"));
  CHECK(discriminant_y(rf("y^2 - 2*x*y + x^2")).is_zero());
  CHECK_THROWS_AS(discriminant_y(rf("y^3 + x")), Error);
  CHECK_THROWS_AS(discriminant_y(rf("x + y")), Error);
}

TEST_CASE("property: discriminant_y matches the fiber discriminant") {
  Rng rng(2004);
  for (int trial = 0; trial < 80; ++trial) {
    Polynomial a = rng.polynomial({"x"}, 2) + Polynomial(Rational(rng.integer(1, 4)));
    Polynomial b = rng.polynomial({"x"}, 3);
    Polynomial c = rng.polynomial({"x"}, 3);
    Polynomial y = Polynomial::variable("y");
    Polynomial V = a * y * y + b * y + c;
    if (V.degree_in("y") != 2) continue;
    RationalFunction disc = discriminant_y(RationalFunction(V));
    Rational x0 = rng.rational();
    Polynomial fiber = V.bind({{"x", x0}});
    Rational A = fiber.coefficient_in("y", 2).constant_value();
    Rational B = fiber.coefficient_in("y", 1).constant_value();
    Rational C = fiber.coefficient_in("y", 0).constant_value();
    CHECK(disc.evaluate({{"x", x0}}) == B * B - 4 * A * C);
  }
}

TEST_CASE("refine and compare") {
  UPoly p = upoly("x^2 - 2");
  auto roots = isolate_roots(p).roots;
  REQUIRE(roots.size() == 2);
  IntervalQ fine = refine_root(p, roots[1].interval, Rational(1, 1000000));
  CHECK(*fine.hi() - *fine.lo() <= Rational(1, 1000000));
  CHECK(to_double(*fine.lo()) == doctest::Approx(1.41421356).epsilon(1e-6));
  CHECK(compare_root(p, roots[1].interval, Rational(7, 5)) == 1);
  CHECK(compare_root(p, roots[1].interval, Rational(3, 2)) == -1);
  CHECK(root_in_interval(p, roots[1].interval, IntervalQ::open(1, 2)));
  CHECK(!root_in_interval(p, roots[1].interval, IntervalQ::open(Rational(3, 2), 2)));
}

TEST_CASE("interval basics") {
  CHECK(IntervalQ::above(0).to_string() == "(0, inf)");
  CHECK(IntervalQ::closed(-1, 1).to_string() == "[-1, 1]");
  CHECK(IntervalQ::point(Rational(3, 2)).to_string() == "{3/2}");
  CHECK(IntervalQ::open(0, 1).sample() == Rational(1, 2));
  CHECK_THROWS_AS(IntervalQ::open(2, 1), Error);
  CHECK(!IntervalQ::open(0, 1).contains(0));
  CHECK(IntervalQ::closed(0, 1).contains(0));
}
