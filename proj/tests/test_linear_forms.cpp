#include <cmath>
#include <random>

#include "doctest.h"
#include "twsolve/linear_forms.hpp"

using namespace tws;

TEST_SUITE_BEGIN("linear_forms");

TEST_CASE("matveev bound: one-number degenerate case is exact") {
  // 1.4 * 30^4 * 1 * 1 * (1+0) * (1+0) * 0.16 = 181440
  MatveevInput in{1, 1, mpz_class(1),
                  {RealEnclosure::from_rational(mpq_class(16, 100))}};
  auto v = matveev_bound(in);
  CHECK(v.contains(mpq_class(181440)));
  CHECK(v.width_double() < 1e-30);
}

TEST_CASE("matveev bound matches the grouped three-log form") {
  // s=3, d=3, B = (log(184 b^3), 3 log b, log alpha) at b=10, D=10^16 stays
  // below 2.74e12 * log D * log b * log(184 b^3).
  auto alpha = dominant_root(Cubic{1, 0, -1, -1}, kDefaultPrecision);
  auto log_alpha = alpha.log();
  auto log_b = RealEnclosure::exact(10L).log();
  auto b1 = RealEnclosure::exact(184000L).log();
  mpz_class d16("10000000000000000");
  MatveevInput in{3, 3, d16,
                  {b1, RealEnclosure::exact(3L) * log_b, log_alpha}};
  auto v = matveev_bound(in);
  auto cap = RealEnclosure::from_rational(mpq_class(274, 100)) *
             RealEnclosure::exact(mpz_class(1000000000000L)) *
             RealEnclosure::exact(d16).log() * log_b * b1;
  CHECK(v.certainly_less(cap));
}

TEST_CASE("matveev bound is monotone in D and every B_j") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dexp(1, 12), bnum(16, 4000);
  for (int i = 0; i < 25; ++i) {
    mpz_class d1, d2;
    mpz_ui_pow_ui(d1.get_mpz_t(), 10, dexp(rng));
    mpz_ui_pow_ui(d2.get_mpz_t(), 10, dexp(rng));
    if (d1 > d2) std::swap(d1, d2);
    mpq_class b1(bnum(rng), 100), b2(bnum(rng), 100);
    if (b1 > b2) std::swap(b1, b2);
    auto lo = matveev_bound(
        {2, 3, d1,
         {RealEnclosure::from_rational(b1), RealEnclosure::from_rational(b1)}});
    auto hi = matveev_bound(
        {2, 3, d2,
         {RealEnclosure::from_rational(b2), RealEnclosure::from_rational(b2)}});
    CHECK(!hi.certainly_less(lo));
  }
}

TEST_CASE("matveev bound validates its inputs") {
  CHECK_THROWS_AS(matveev_bound({0, 3, mpz_class(1), {}}), DomainError);
  CHECK_THROWS_AS(
      matveev_bound({1, 0, mpz_class(1), {RealEnclosure::exact(1L)}}),
      DomainError);
  CHECK_THROWS_AS(
      matveev_bound({1, 1, mpz_class(0), {RealEnclosure::exact(1L)}}),
      DomainError);
}

TEST_CASE("resolve_n_bound formula value at S = e") {
  // 2 * e * log(e) = 2e = 5.436..., ceiled to 6.
  auto e = RealEnclosure::exact(1L);
  // exp via log-inverse is unavailable; use a tight rational bracket of e
  auto S = RealEnclosure::from_endpoints(mpq_class(27182818284, 10000000000),
                                         mpq_class(27182818285, 10000000000));
  CHECK(resolve_n_bound(S) == 6);
  (void)e;
}

TEST_CASE("resolve_n_bound rejects S below the formula domain") {
  CHECK_THROWS_AS(resolve_n_bound(RealEnclosure::exact(1L)), DomainError);
  CHECK_THROWS_AS(
      resolve_n_bound(RealEnclosure::from_rational(mpq_class(1, 2))),
      DomainError);
}

TEST_CASE("resolve_n_bound reference instances") {
  auto log_of = [](long v) { return RealEnclosure::exact(v).log(); };
  // Padovan, b = 2: S = 9.78e12 * log 2 * log(184 * 8) stays below 1.82e16.
  auto S_pad = RealEnclosure::exact(mpz_class("9780000000000")) * log_of(2) *
               log_of(1472);
  CHECK(resolve_n_bound(S_pad) <= mpz_class("18200000000000000"));
  // Perrin, b = 10: S = 9.78e12 * log 10 * log(8000) stays below 1.34e16.
  auto S_per = RealEnclosure::exact(mpz_class("9780000000000")) * log_of(10) *
               log_of(8000);
  CHECK(resolve_n_bound(S_per) <= mpz_class("13400000000000000"));
}

TEST_CASE("resolve_n_bound never understates: x*/log x* >= S") {
  std::mt19937_64 rng(20240818);
  std::uniform_real_distribution<double> expo(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    // S in [16, 1e20], log-uniform
    double e = 16.0 * std::pow(10.0, expo(rng) * 18.8);
    auto S = RealEnclosure::from_double(e);
    mpz_class x = resolve_n_bound(S);
    auto xe = RealEnclosure::exact(x);
    // certify x >= S * log x
    CHECK(xe.certainly_geq(S * xe.log()));
  }
}

TEST_CASE("family constants carry the documented values") {
  auto pad = family_constants(SequenceId::Padovan);
  auto per = family_constants(SequenceId::Perrin);
  auto nar = family_constants(SequenceId::Narayana);

  CHECK(pad.lambda_cap == mpq_class(277, 100));
  CHECK(per.lambda_cap == 3);
  CHECK(nar.lambda_cap == mpq_class(17, 5));
  CHECK(pad.gamma_cap == mpq_class(277, 50));
  CHECK(per.gamma_cap == 6);
  CHECK(nar.gamma_cap == mpq_class(34, 5));
  CHECK(pad.b1_inner_constant == 184);
  CHECK(per.b1_inner_constant == 8);
  CHECK(nar.b1_inner_constant == 248);
  CHECK(pad.search_cutoff == 300);
  CHECK(per.search_cutoff == 350);
  CHECK(nar.search_cutoff == 400);

  // A = gamma_cap / log(root): 19.70..., 21.33..., 17.79...
  CHECK(pad.reduction_A.strictly_inside(mpq_class(1969, 100), mpq_class(1971, 100)));
  CHECK(per.reduction_A.strictly_inside(mpq_class(2133, 100), mpq_class(2135, 100)));
  CHECK(nar.reduction_A.strictly_inside(mpq_class(1778, 100), mpq_class(1780, 100)));
}

TEST_CASE("family constants re-derive from the Binet error bounds") {
  for (auto id : {SequenceId::Padovan, SequenceId::Perrin, SequenceId::Narayana})
    CHECK(verify_family_constants(family_constants(id)));
}

TEST_CASE("family_bound maxima sit near the coarse reference values") {
  // max over b in [2,10] is attained at b = 10; reference magnitudes
  // 1.82e16 / 1.34e16 / 1.85e16 must agree within 5%.
  auto check = [](SequenceId id, const char* ref) {
    EquationFamily f{id, BaseSign::Plus, TailSign::Minus};
    mpz_class m = family_bound(f, 10);
    for (long b = 2; b < 10; ++b) CHECK(family_bound(f, b) <= m);
    mpq_class rel = mpq_class(m) / mpq_class(mpz_class(ref)) - 1;
    CHECK(abs(rel) <= mpq_class(5, 100));
  };
  check(SequenceId::Padovan, "18200000000000000");
  check(SequenceId::Perrin, "13400000000000000");
  check(SequenceId::Narayana, "18500000000000000");
}

TEST_CASE("family_bound for perrin b=2 stays below the closed-form theorem value") {
  // 1.96e13 * log 2 * log 64 * (29.91 + log log 2 + log log 64)
  auto log2 = RealEnclosure::exact(2L).log();
  auto log64 = RealEnclosure::exact(64L).log();
  auto inner = RealEnclosure::from_rational(mpq_class(2991, 100)) +
               log2.log() + log64.log();
  auto formula = RealEnclosure::exact(mpz_class("19600000000000")) * log2 *
                 log64 * inner;
  mpz_class ours = family_bound({SequenceId::Perrin, BaseSign::Plus,
                                 TailSign::Minus}, 2);
  CHECK(RealEnclosure::exact(ours).certainly_less(formula));
}

TEST_CASE("family_bound requires b >= 2 and dominates the cutoff") {
  EquationFamily f{SequenceId::Padovan, BaseSign::Plus, TailSign::Plus};
  CHECK_THROWS_AS(family_bound(f, 1), DomainError);
  for (const auto& fam : all_families())
    for (long b : {2L, 10L})
      CHECK(family_bound(fam, b) > family_constants(fam.sequence).search_cutoff);
}

TEST_SUITE_END();
