#include <doctest.h>

#include <random>

#include "arrprod/geometry.hpp"
#include "support/expect_error.hpp"
#include "support/oracles.hpp"

using namespace arrprod;
using oracle::triple;

namespace {

Triple rat_triple(Rational a, Rational b, Rational c) { return {std::move(a), std::move(b), std::move(c)}; }

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("values are kept reduced with a positive denominator") {
    const Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational(10, 5).to_string() == "2");
    CHECK(Rational(0, -7).to_string() == "0");
  }

  TEST_CASE("arithmetic is exact") {
    const Rational third(1, 3);
    CHECK(third + third + third == Rational(1));
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    CHECK(Rational(1, 3) < Rational(1, 2));
    // Big values stay exact.
    Rational big(1);
    for (int i = 0; i < 40; ++i) big *= Rational(1000003);
    CHECK((big / big) == Rational(1));
    CHECK(((big + Rational(1)) - big) == Rational(1));
  }

  TEST_CASE("division by zero is an error") {
    CHECK_ERROR_CODE(Rational(1) / Rational(0), ErrorCode::DivisionByZero);
    CHECK_ERROR_CODE(Rational(1, 0), ErrorCode::DivisionByZero);
  }

  TEST_CASE("parse accepts p and p/q only") {
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
    for (const char* bad : {"", "-", "1/", "/2", "1/-2", "1/0", "0.5", "1e3", "+3", "1/2/3", " 1", "abc"}) {
      CAPTURE(bad);
      CHECK_ERROR_CODE(Rational::parse(bad), ErrorCode::ParseError);
    }
  }
}

TEST_SUITE("exactgeom") {
  TEST_CASE("normalize_line examples") {
    CHECK(normalize_line(triple(2, -4, 6)).coeffs() == triple(1, -2, 3));
    CHECK(normalize_line(rat_triple(0, Rational(-1, 2), Rational(1, 3))).coeffs() == triple(0, 3, -2));
    CHECK(normalize_line(triple(-5, 0, 0)).coeffs() == triple(1, 0, 0));
  }

  TEST_CASE("zero triples are rejected") {
    CHECK_ERROR_CODE(normalize_line(triple(0, 0, 0)), ErrorCode::ZeroTriple);
    CHECK_ERROR_CODE(ProjPoint(triple(0, 0, 0)), ErrorCode::ZeroTriple);
    CHECK_ERROR_CODE(AffLine(triple(0, 0, 1)), ErrorCode::DegenerateLine);
  }

  TEST_CASE("normalization is canonical under scaling (100 seeded samples)") {
    oracle::RandomArrangements gen(20260101);
    for (int i = 0; i < 100; ++i) {
      const Triple v = gen.nonzero_triple(-50, 50);
      long num = 0;
      while (num == 0) num = gen.uniform(-30, 30);
      const Rational lambda(num, gen.uniform(1, 30));
      const Triple scaled{lambda * v[0], lambda * v[1], lambda * v[2]};
      const auto once = normalize_line(v).coeffs();
      CHECK(normalize_line(scaled).coeffs() == once);
      CHECK(normalize_line(once).coeffs() == once);
      // First nonzero entry positive, integer, coprime.
      Integer g = 0;
      bool seen_leading = false;
      for (const auto& c : once) {
        CHECK(c.denominator() == 1);
        if (!seen_leading && !c.is_zero()) {
          CHECK(c.sign() > 0);
          seen_leading = true;
        }
        g = gcd(g, c.numerator());
      }
      CHECK(g == 1);
    }
  }

  TEST_CASE("intersect examples") {
    const ProjLine x(triple(1, 0, 0)), y(triple(0, 1, 0));
    CHECK(intersect(x, y) == ProjPoint(triple(0, 0, 1)));
    CHECK(intersect(ProjLine(triple(1, -1, 0)), ProjLine(triple(1, 0, -1))) == ProjPoint(triple(1, 1, 1)));
    CHECK(intersect(x, ProjLine(triple(1, -1, 0))) == ProjPoint(triple(0, 0, 1)));
    CHECK(intersect(y, x) == intersect(x, y));
    CHECK_ERROR_CODE(intersect(x, ProjLine(triple(-3, 0, 0))), ErrorCode::EqualLines);
  }

  TEST_CASE("point_on_line examples") {
    const ProjPoint one(triple(1, 1, 1));
    CHECK(point_on_line(one, ProjLine(triple(1, -1, 0))));
    CHECK_FALSE(point_on_line(one, ProjLine(triple(1, 0, 0))));
    CHECK_FALSE(point_on_line(ProjPoint(triple(0, 0, 1)), ProjLine(triple(1, 2, 5))));
  }

  TEST_CASE("intersections lie on both lines across the corpus") {
    for (const auto& name : oracle::example_names()) {
      const auto arr = oracle::example(name);
      for (std::size_t i = 0; i < arr.size(); ++i) {
        for (std::size_t j = 0; j < arr.size(); ++j) {
          if (i == j) continue;
          const ProjPoint p = intersect(arr[i], arr[j]);
          CHECK(point_on_line(p, arr[i]));
          CHECK(point_on_line(p, arr[j]));
          CHECK(p == ProjPoint(p.coords()));  // canonical already
        }
      }
    }
  }

  TEST_CASE("projectivize and restrict_to_affine") {
    CHECK(projectivize(AffLine(triple(1, 0, -1))).coeffs() == triple(1, 0, -1));
    const ProjLine z(triple(0, 0, 1));
    CHECK(restrict_to_affine(ProjLine(triple(1, 0, 0)), z) == AffLine(triple(1, 0, 0)));
    CHECK_ERROR_CODE(restrict_to_affine(z, ProjLine(triple(0, 0, 7))), ErrorCode::LineAtInfinity);

    SUBCASE("round trip through the identity chart") {
      oracle::RandomArrangements gen(77);
      for (int i = 0; i < 100; ++i) {
        Triple t = gen.nonzero_triple(-9, 9);
        if (t[0].is_zero() && t[1].is_zero()) continue;
        const AffLine l(t);
        CHECK(restrict_to_affine(projectivize(l), z) == l);
      }
    }

    SUBCASE("braid at H6 uses the fixed chart") {
      const auto braid = oracle::example("braid");
      const ProjLine& h6 = braid[5];
      CHECK(restrict_to_affine(braid[0], h6) == AffLine(triple(1, 0, 0)));
      CHECK(restrict_to_affine(braid[1], h6) == AffLine(triple(1, 0, -1)));
      CHECK(restrict_to_affine(braid[2], h6) == AffLine(triple(0, 1, 0)));
      CHECK(restrict_to_affine(braid[3], h6) == AffLine(triple(1, -1, -1)));
      CHECK(restrict_to_affine(braid[4], h6) == AffLine(triple(1, -1, 0)));
    }
  }

  TEST_CASE("the chart preserves incidence") {
    // Three concurrent lines stay concurrent and a point on the line at
    // infinity turns into a parallel class.
    oracle::RandomArrangements gen(4242);
    for (int trial = 0; trial < 50; ++trial) {
      const auto arr = gen.arrangement(5, 1);
      for (std::size_t at = 0; at < arr.size(); ++at) {
        for (std::size_t i = 0; i < arr.size(); ++i) {
          for (std::size_t j = i + 1; j < arr.size(); ++j) {
            if (i == at || j == at) continue;
            const bool meets_on_infinity = point_on_line(intersect(arr[i], arr[j]), arr[at]);
            const AffLine a = restrict_to_affine(arr[i], arr[at]);
            const AffLine b = restrict_to_affine(arr[j], arr[at]);
            const bool parallel = a.coeffs()[0] * b.coeffs()[1] == a.coeffs()[1] * b.coeffs()[0];
            CHECK(meets_on_infinity == parallel);
          }
        }
      }
    }
  }
}
