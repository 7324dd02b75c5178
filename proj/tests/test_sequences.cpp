#include <vector>

#include "doctest.h"
#include "twsolve/algebraic.hpp"
#include "twsolve/sequences.hpp"

using namespace tws;

TEST_SUITE_BEGIN("sequences");

namespace {
const std::vector<long> kPadovanPrefix = {1,  1,  1,  2,  2,  3,   4,
                                          5,  7,  9,  12, 16, 21,  28,
                                          37, 49, 65, 86, 114, 151, 200};
const std::vector<long> kPerrinPrefix = {3,  0,  2,  3,  2,  5,   5,
                                         7,  10, 12, 17, 22, 29,  39,
                                         51, 68, 90, 119, 158, 209, 277};
const std::vector<long> kNarayanaPrefix = {1,  1,  1,  2,   3,   4,  6,
                                           9,  13, 19, 28,  41,  60, 88,
                                           129, 189, 277, 406, 595, 872};
}  // namespace

TEST_CASE("listed prefixes are reproduced verbatim") {
  auto check = [](SequenceId id, const std::vector<long>& expect) {
    auto got = terms_up_to(sequence_spec(id), static_cast<long>(expect.size()) - 1);
    REQUIRE(got.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i) CHECK(got[i] == expect[i]);
  };
  check(SequenceId::Padovan, kPadovanPrefix);
  check(SequenceId::Perrin, kPerrinPrefix);
  check(SequenceId::Narayana, kNarayanaPrefix);
}

TEST_CASE("single terms") {
  CHECK(term(sequence_spec(SequenceId::Padovan), 8) == 7);
  CHECK(term(sequence_spec(SequenceId::Perrin), 0) == 3);
  // N_22 = 2745 = 8 * 7^3 + 1
  mpz_class n22 = term(sequence_spec(SequenceId::Narayana), 22);
  CHECK(n22 == 2745);
  CHECK(n22 == 8 * 343 + 1);
}

TEST_CASE("terms_up_to matches the boundary examples") {
  auto perrin = terms_up_to(sequence_spec(SequenceId::Perrin), 5);
  CHECK(perrin == std::vector<mpz_class>{3, 0, 2, 3, 2, 5});
  auto narayana = terms_up_to(sequence_spec(SequenceId::Narayana), 4);
  CHECK(narayana == std::vector<mpz_class>{1, 1, 1, 2, 3});
  auto padovan = terms_up_to(sequence_spec(SequenceId::Padovan), 0);
  CHECK(padovan == std::vector<mpz_class>{1});
}

TEST_CASE("recurrence holds exactly and term() agrees with terms_up_to()") {
  for (auto id : {SequenceId::Padovan, SequenceId::Perrin, SequenceId::Narayana}) {
    const auto& spec = sequence_spec(id);
    auto all = terms_up_to(spec, 203);
    const auto [c2, c1, c0] = spec.recurrence;
    for (long n = 0; n + 3 <= 203; ++n)
      CHECK(all[n + 3] == c2 * all[n + 2] + c1 * all[n + 1] + c0 * all[n]);
    for (long n = 0; n <= 100; n += 7) CHECK(term(spec, n) == all[n]);
  }
}

TEST_CASE("growth envelope certification") {
  SUBCASE("perrin holds on [2, 1000]") {
    const auto& spec = sequence_spec(SequenceId::Perrin);
    auto root = dominant_root(spec.char_poly, kDefaultPrecision);
    auto rep = check_growth_bounds(spec, 1000, root);
    CHECK(rep.all_passed());
  }
  SUBCASE("narayana holds on [1, 1000], including the n=1,2 boundaries") {
    const auto& spec = sequence_spec(SequenceId::Narayana);
    auto root = dominant_root(spec.char_poly, kDefaultPrecision);
    auto rep = check_growth_bounds(spec, 1000, root);
    CHECK(rep.all_passed());
  }
  SUBCASE("padovan has exactly one exception, at n=3") {
    // P_3 = 2 exceeds alpha^2 = 1.7548...; every other n in [1, 1000]
    // satisfies alpha^(n-3) <= P_n <= alpha^(n-1).
    const auto& spec = sequence_spec(SequenceId::Padovan);
    auto root = dominant_root(spec.char_poly, kDefaultPrecision);
    auto rep = check_growth_bounds(spec, 1000, root);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0] == 3);
    // and the violation is real: alpha^2 < 2 certified
    CHECK(root.pow_int(2).certainly_less(RealEnclosure::exact(2L)));
  }
}

TEST_CASE("binet error certification to 1000") {
  for (auto id : {SequenceId::Padovan, SequenceId::Perrin, SequenceId::Narayana}) {
    const auto& spec = sequence_spec(id);
    auto binet = binet_data_for(spec, kDefaultPrecision);
    auto rep = check_binet_error(spec, 1000, binet);
    CHECK(rep.all_passed());
    CHECK(rep.max_precision_used <= kPrecisionCap);
  }
}

TEST_CASE("binet error boundary values") {
  // |E_2 - alpha^2| < 2/alpha with alpha^2 inside (1.7424, 1.7689)
  const auto& perrin = sequence_spec(SequenceId::Perrin);
  auto alpha = dominant_root(perrin.char_poly, kDefaultPrecision);
  auto alpha2 = alpha.pow_int(2);
  CHECK(alpha2.strictly_inside(mpq_class(17424, 10000), mpq_class(17689, 10000)));
  auto lhs = (RealEnclosure::exact(2L) - alpha2).abs();
  CHECK(lhs.certainly_less(RealEnclosure::exact(2L) / alpha));

  // Narayana main term at n=1 is C_phi * phi^2; C_phi * phi is in (0.59, 0.62)
  const auto& nar = sequence_spec(SequenceId::Narayana);
  auto nd = binet_data_for(nar, kDefaultPrecision);
  CHECK((nd.coeff * nd.root)
            .strictly_inside(mpq_class(59, 100), mpq_class(62, 100)));
  auto rep = check_binet_error(nar, 1, nd);
  CHECK(rep.all_passed());
}

TEST_CASE("negative indices are rejected") {
  CHECK_THROWS_AS(term(sequence_spec(SequenceId::Padovan), -1), DomainError);
  CHECK_THROWS_AS(terms_up_to(sequence_spec(SequenceId::Perrin), -2),
                  DomainError);
}

TEST_CASE("family naming") {
  EquationFamily f{SequenceId::Perrin, BaseSign::Minus, TailSign::Plus};
  CHECK(f.name() == "perrin williams-second");
  CHECK(f.equation() == "E_n = (b-1)*b^l + 1");
  CHECK(all_families().size() == 12);
}

TEST_CASE("growth report covers requested range only") {
  const auto& spec = sequence_spec(SequenceId::Perrin);
  auto root = dominant_root(spec.char_poly, kDefaultPrecision);
  auto rep = check_growth_bounds(spec, 50, root);
  CHECK(rep.from_n == 2);  // E_1 = 0 sits outside the envelope's domain
  CHECK(rep.to_n == 50);
  CHECK_THROWS_AS(check_growth_bounds(spec, 1, root), DomainError);
}

TEST_SUITE_END();
