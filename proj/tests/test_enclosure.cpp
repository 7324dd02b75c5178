#include <random>

#include "doctest.h"
#include "twsolve/enclosure.hpp"

using namespace tws;

TEST_SUITE_BEGIN("enclosure");

TEST_CASE("exact integers are point intervals") {
  auto e = RealEnclosure::exact(42L);
  CHECK(e.is_point());
  CHECK(e.contains(mpz_class(42)));
  CHECK(e.lo_rational() == 42);
}

TEST_CASE("rational endpoints round outward") {
  mpq_class third(1, 3);
  auto e = RealEnclosure::from_rational(third, 64);
  CHECK(e.contains(third));
  CHECK(!e.is_point());  // 1/3 is not dyadic
  CHECK(e.width_double() < 1e-18);
}

TEST_CASE("arithmetic encloses exact rational results") {
  // Random chains of +,-,*,/ compared against exact mpq arithmetic.
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30), op(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    mpq_class x(num(rng), den(rng));
    x.canonicalize();
    auto e = RealEnclosure::from_rational(x, 96);
    for (int step = 0; step < 6; ++step) {
      mpq_class y(num(rng), den(rng));
      y.canonicalize();
      auto f = RealEnclosure::from_rational(y, 96);
      switch (op(rng)) {
        case 0: x += y; e = e + f; break;
        case 1: x -= y; e = e - f; break;
        case 2: x *= y; e = e * f; break;
        default:
          if (sgn(y) == 0) continue;
          x /= y;
          e = e / f;
      }
      REQUIRE(e.contains(x));
    }
  }
}

TEST_CASE("log brackets known decimals") {
  auto l2 = RealEnclosure::exact(2L).log();
  CHECK(l2.strictly_inside(mpq_class(693147180, 1000000000),
                           mpq_class(693147181, 1000000000)));
  auto l1 = RealEnclosure::exact(1L).log();
  CHECK(l1.is_point());
  CHECK(l1.contains(mpq_class(0)));
}

TEST_CASE("pow_int and sqrt agree with exact values") {
  auto three = RealEnclosure::exact(3L);
  CHECK(three.pow_int(5).contains(mpz_class(243)));
  CHECK(three.pow_int(0).is_point());
  CHECK(three.pow_int(-2).contains(mpq_class(1, 9)));
  auto nine = RealEnclosure::exact(9L);
  CHECK(nine.sqrt().contains(mpz_class(3)));
}

TEST_CASE("division by an interval enclosing zero throws") {
  auto z = RealEnclosure::from_endpoints(mpq_class(-1, 2), mpq_class(1, 2));
  CHECK_THROWS_AS(RealEnclosure::exact(1L) / z, ZeroInDivisor);
  CHECK_THROWS_AS(z.recip(), ZeroInDivisor);
}

TEST_CASE("certified comparisons never lie") {
  auto a = RealEnclosure::from_endpoints(mpq_class(1), mpq_class(2));
  auto b = RealEnclosure::from_endpoints(mpq_class(3), mpq_class(4));
  CHECK(a.certainly_less(b));
  CHECK(!b.certainly_less(a));
  auto c = RealEnclosure::from_endpoints(mpq_class(2), mpq_class(3));
  CHECK(!a.certainly_less(c));  // touching intervals are not strict
  CHECK(a.certainly_leq(c));
}

TEST_CASE("floor endpoints") {
  auto e = RealEnclosure::from_endpoints(mpq_class(5, 2), mpq_class(7, 2));
  CHECK(e.floor_lo() == 2);
  CHECK(e.floor_hi() == 3);
}

TEST_CASE("refinement nests") {
  RefinableReal r([](mpfr_prec_t p) {
    return RealEnclosure::exact(2L, p).sqrt();
  });
  auto coarse = r.current();
  auto finer = r.refine();
  CHECK(finer.contained_in(coarse));
  CHECK(r.precision() == 2 * kDefaultPrecision);
  CHECK(finer.width_double() < coarse.width_double());
}

TEST_CASE("refinement ladder stops at the cap") {
  RefinableReal r([](mpfr_prec_t p) { return RealEnclosure::exact(1L, p); },
                  kDefaultPrecision, 768);
  r.refine();
  r.refine();
  CHECK(r.precision() == 768);
  CHECK_THROWS_AS(r.refine(), PrecisionExhausted);
}

TEST_CASE("symbolic zero") {
  auto z = RefinableReal::exact_zero();
  CHECK(z.known_zero());
  CHECK(z.current().contains_zero());
  CHECK(z.current().is_point());
}

TEST_SUITE_END();
