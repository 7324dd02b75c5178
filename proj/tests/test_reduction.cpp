#include <vector>

#include "doctest.h"
#include "twsolve/algebraic.hpp"
#include "twsolve/linear_forms.hpp"
#include "twsolve/reduction.hpp"

using namespace tws;

namespace {

RefinableReal tau_log_b_over_log_alpha(long b) {
  Cubic pad{1, 0, -1, -1};
  return RefinableReal([pad, b](mpfr_prec_t p) {
    return RealEnclosure::exact(b, p).log() / dominant_root(pad, p).log();
  });
}

RefinableReal golden_ratio() {
  return RefinableReal([](mpfr_prec_t p) {
    return (RealEnclosure::exact(1L, p) +
            RealEnclosure::exact(5L, p).sqrt()) /
           RealEnclosure::exact(2L, p);
  });
}

}  // namespace

TEST_SUITE_BEGIN("reduction");

TEST_CASE("partial quotients of log 2 / log alpha") {
  const std::vector<long> listed = {2, 2, 6, 1, 1, 1, 2, 1, 13, 3, 1, 1, 1,
                                    1, 1, 8, 1, 3, 2, 2, 7, 1, 2, 5,  1, 2};
  auto cf = partial_quotients(tau_log_b_over_log_alpha(2), listed.size());
  REQUIRE(cf.count() >= listed.size());
  for (size_t i = 0; i < listed.size(); ++i)
    CHECK(cf.quotients()[i] == listed[i]);
}

TEST_CASE("golden ratio expands to all ones") {
  auto cf = partial_quotients(golden_ratio(), 20);
  for (size_t i = 0; i < 20; ++i) CHECK(cf.quotients()[i] == 1);
  // Fibonacci denominators
  CHECK(cf.q(0) == 1);
  CHECK(cf.q(1) == 1);
  CHECK(cf.q(6) == 13);
}

TEST_CASE("rational input stalls with PrecisionExhausted") {
  // 7/3 is not dyadic: every true enclosure of it admits expansions
  // starting [2; 2, ...] and [2; 3], so only a_0 is ever certified.
  RefinableReal x([](mpfr_prec_t p) {
    return RealEnclosure::from_rational(mpq_class(7, 3), p);
  }, kDefaultPrecision, 2048);
  ContinuedFraction cf(x);
  REQUIRE(cf.count() >= 1);
  CHECK(cf.quotients()[0] == 2);
  CHECK_THROWS_AS(cf.ensure_count(3), PrecisionExhausted);

  // A dyadic rational is represented exactly, so its full finite expansion
  // [2; 2] is certified before precision runs out.
  RefinableReal d([](mpfr_prec_t p) {
    return RealEnclosure::from_rational(mpq_class(5, 2), p);
  }, kDefaultPrecision, 2048);
  ContinuedFraction dcf(d);
  REQUIRE(dcf.count() == 2);
  CHECK(dcf.quotients()[0] == 2);
  CHECK(dcf.quotients()[1] == 2);
  CHECK_THROWS_AS(dcf.ensure_count(3), PrecisionExhausted);
}

TEST_CASE("convergent identities hold exactly") {
  auto cf = partial_quotients(tau_log_b_over_log_alpha(3), 40);
  // p_k q_{k-1} - p_{k-1} q_k = (-1)^(k-1)
  for (size_t k = 1; k < 40; ++k) {
    mpz_class det = cf.p(k) * cf.q(k - 1) - cf.p(k - 1) * cf.q(k);
    CHECK(det == (k % 2 == 1 ? 1 : -1));
  }
  // |tau - p_k/q_k| < 1 / (q_k q_{k+1})
  auto tau = cf.value().current();
  for (size_t k = 0; k + 1 < 40; k += 5) {
    mpq_class conv(cf.p(k), cf.q(k));
    conv.canonicalize();
    auto err = (tau - RealEnclosure::from_rational(conv, tau.precision())).abs();
    mpq_class cap(1, 1);
    cap /= mpq_class(cf.q(k) * cf.q(k + 1));
    CHECK(err.certainly_less(RealEnclosure::from_rational(cap, tau.precision())));
  }
}

TEST_CASE("nearest integer distance") {
  auto near_quarter = RealEnclosure::from_endpoints(mpq_class(22499, 10000),
                                                    mpq_class(22501, 10000));
  auto d = nearest_integer_distance(near_quarter);
  CHECK(d.strictly_inside(mpq_class(2498, 10000), mpq_class(2502, 10000)));

  auto half = nearest_integer_distance(RealEnclosure::from_rational(mpq_class(7, 2)));
  CHECK(half.contains(mpq_class(1, 2)));

  auto wide = RealEnclosure::from_endpoints(mpq_class(0), mpq_class(1));
  CHECK_THROWS_AS(nearest_integer_distance(wide), AmbiguousMidpoint);
  auto straddle = RealEnclosure::from_endpoints(mpq_class(34999, 10000),
                                                mpq_class(35001, 10000));
  CHECK_THROWS_AS(nearest_integer_distance(straddle), AmbiguousMidpoint);
}

TEST_CASE("baker-davenport reproduces the padovan reduction") {
  mpz_class M("18200000000000000");
  auto fc = family_constants(SequenceId::Padovan);
  auto B = dominant_root(Cubic{1, 0, -1, -1}, kDefaultPrecision);
  for (long b : {2L, 5L, 10L}) {
    Cubic pad{1, 0, -1, -1};
    RefinableReal mu([pad, b](mpfr_prec_t p) {
      auto root = dominant_root(pad, p);
      auto coeff = binet_coefficient(sequence_spec(SequenceId::Padovan), root);
      return (RealEnclosure::exact(b + 1, p) / coeff).log() / root.log();
    });
    auto res = baker_davenport(tau_log_b_over_log_alpha(b), mu,
                               fc.reduction_A, B, M);
    auto* out = std::get_if<ReductionOutcome>(&res);
    REQUIRE(out != nullptr);
    CHECK(out->method == ReductionMethod::BakerDavenport);
    CHECK(out->new_bound < 212);
    CHECK(out->new_bound < fc.search_cutoff);
    CHECK(out->q > 6 * M);
    REQUIRE(out->epsilon.has_value());
    CHECK(out->epsilon->certainly_positive());
  }
}

TEST_CASE("legendre branch reproduces the perrin b=2 reduction") {
  mpz_class M("13400000000000000");
  auto fc = family_constants(SequenceId::Perrin);
  auto B = dominant_root(Cubic{1, 0, -1, -1}, kDefaultPrecision);
  auto out = legendre_bound(tau_log_b_over_log_alpha(2), fc.reduction_A, B, M);
  CHECK(out.method == ReductionMethod::Legendre);
  REQUIRE(out.a_max.has_value());
  CHECK(*out.a_max == 80);
  CHECK(out.new_bound == 158);
  CHECK(out.new_bound < 159);
  CHECK(out.q > M);
  // first denominator above M: the previous one is below
  auto cf = partial_quotients(tau_log_b_over_log_alpha(2),
                              out.convergent_index + 1);
  CHECK(cf.q(out.convergent_index - 1) <= M);
  // Legendre hypothesis margin at the cutoff: alpha^351 / (2A) > 1.7e41 > M.
  auto alpha = dominant_root(Cubic{1, 0, -1, -1}, kDefaultPrecision);
  auto lhs = alpha.pow_int(351) /
             (RealEnclosure::exact(2L) * fc.reduction_A);
  CHECK(lhs.at_least(mpz_class("170000000000000000000000000000000000000000")));
  CHECK(lhs.at_least(M));
}

TEST_CASE("legendre formula on the golden ratio") {
  // all quotients 1 so a(M) = 1 and new_bound = floor(log(3AM)/log B)
  mpz_class M(100);
  auto A = RealEnclosure::exact(2L);
  auto B = RealEnclosure::exact(2L);
  auto out = legendre_bound(golden_ratio(), A, B, M);
  REQUIRE(out.a_max.has_value());
  CHECK(*out.a_max == 1);
  // log2(2 * 3 * 100) = log2(600) = 9.22..., floored to 9
  CHECK(out.new_bound == 9);
}

TEST_CASE("symbolically zero mu routes to the legendre branch") {
  auto A = RealEnclosure::exact(20L);
  auto B = dominant_root(Cubic{1, 0, -1, -1}, kDefaultPrecision);
  CHECK_THROWS_AS(baker_davenport(tau_log_b_over_log_alpha(2),
                                  RefinableReal::exact_zero(), A, B,
                                  mpz_class(1000)),
                  MuDegenerate);
}

TEST_CASE("epsilon <= 0 on every attempt is reported, not thrown") {
  // mu = tau makes ||mu q|| = ||tau q||, so epsilon = (1 - M)||tau q|| < 0
  // for every convergent.
  auto A = RealEnclosure::exact(20L);
  auto B = dominant_root(Cubic{1, 0, -1, -1}, kDefaultPrecision);
  auto res = baker_davenport(tau_log_b_over_log_alpha(2),
                             tau_log_b_over_log_alpha(2), A, B,
                             mpz_class(100000));
  auto* fail = std::get_if<ReductionFailure>(&res);
  REQUIRE(fail != nullptr);
  CHECK(fail->attempts == 10);
  CHECK(fail->reason == "epsilon_nonpositive");
}

TEST_CASE("reduction input validation") {
  auto B = RealEnclosure::exact(2L);
  auto tau = golden_ratio();
  CHECK_THROWS_AS(legendre_bound(tau, RealEnclosure::exact(0L), B, mpz_class(5)),
                  DomainError);
  CHECK_THROWS_AS(legendre_bound(tau, RealEnclosure::exact(2L),
                                 RealEnclosure::exact(1L), mpz_class(5)),
                  DomainError);
  CHECK_THROWS_AS(legendre_bound(tau, RealEnclosure::exact(2L), B, mpz_class(0)),
                  DomainError);
}

TEST_SUITE_END();
