#include "twsolve/linear_forms.hpp"

#include <algorithm>

namespace tws {

RealEnclosure matveev_bound(const MatveevInput& input) {
  if (input.s < 1 || static_cast<size_t>(input.s) != input.height_bounds.size())
    throw DomainError("matveev_bound: s must match the number of B_j");
  if (input.degree < 1) throw DomainError("matveev_bound: degree must be >= 1");
  if (input.max_exponent < 1) throw DomainError("matveev_bound: D must be >= 1");

  mpfr_prec_t p = kDefaultPrecision;
  for (const auto& b : input.height_bounds) p = std::max(p, b.precision());

  // 1.4 * 30^(s+3) is exact.
  mpz_class pow30;
  mpz_ui_pow_ui(pow30.get_mpz_t(), 30, static_cast<unsigned long>(input.s) + 3);
  RealEnclosure acc =
      RealEnclosure::from_rational(mpq_class(7, 5) * mpq_class(pow30), p);

  // s^4.5 = sqrt(s^9)
  mpz_class s9;
  mpz_ui_pow_ui(s9.get_mpz_t(), static_cast<unsigned long>(input.s), 9);
  acc = acc * RealEnclosure::exact(s9, p).sqrt();

  RealEnclosure d = RealEnclosure::exact(static_cast<long>(input.degree), p);
  RealEnclosure one = RealEnclosure::exact(1L, p);
  acc = acc * d * d * (one + d.log());
  acc = acc * (one + RealEnclosure::exact(input.max_exponent, p).log());
  for (const auto& b : input.height_bounds) acc = acc * b;
  return acc;
}

mpz_class resolve_n_bound(const RealEnclosure& S) {
  // The formula 2*S*log S needs S > 1 to be meaningful, with enough room
  // that the result exceeds e; S = e is the smallest value exercised.
  if (mpfr_cmp_d(S.lo_raw(), 1.35) < 0)
    throw DomainError("resolve_n_bound requires S comfortably above 1");
  RealEnclosure bound = RealEnclosure::exact(2L, S.precision()) * S * S.log();
  mpz_class ceiling;
  mpfr_get_z(ceiling.get_mpz_t(), bound.hi_raw(), MPFR_RNDU);
  return ceiling;
}

FamilyConstants family_constants(SequenceId id, mpfr_prec_t precision) {
  FamilyConstants fc;
  fc.sequence = id;
  switch (id) {
    case SequenceId::Padovan:
      fc.lambda_cap = mpq_class(277, 100);
      fc.b1_inner_constant = 184;  // 8 * 23
      fc.search_cutoff = 300;
      break;
    case SequenceId::Perrin:
      fc.lambda_cap = mpq_class(3);
      fc.b1_inner_constant = 8;
      fc.search_cutoff = 350;
      break;
    case SequenceId::Narayana:
      fc.lambda_cap = mpq_class(17, 5);
      fc.b1_inner_constant = 248;  // 8 * 31
      fc.search_cutoff = 400;
      break;
  }
  fc.gamma_cap = 2 * fc.lambda_cap;
  const SequenceSpec& spec = sequence_spec(id);
  RealEnclosure root = dominant_root(spec.char_poly, precision);
  fc.reduction_A = RealEnclosure::from_rational(fc.gamma_cap, precision) /
                   root.log();
  return fc;
}

bool verify_family_constants(const FamilyConstants& fc, mpfr_prec_t precision) {
  const SequenceSpec& spec = sequence_spec(fc.sequence);
  RealEnclosure root = dominant_root(spec.char_poly, precision);
  RealEnclosure coeff = binet_coefficient(spec, root);
  RealEnclosure one = RealEnclosure::exact(1L, precision);
  RealEnclosure cap = RealEnclosure::from_rational(fc.lambda_cap, precision);

  // (|error| + 1) / (coeff * root^shift) <= lambda_cap at the cutoff, where
  // |error| <= err_coeff / root^(cutoff/2).
  RealEnclosure err =
      RealEnclosure::exact(static_cast<long>(spec.binet_error_coeff),
                           precision) /
      root.pow_int(fc.search_cutoff).sqrt();
  RealEnclosure lhs =
      (err + one) / (coeff * root.pow_int(spec.binet_power_shift));
  if (!lhs.certainly_leq(cap)) return false;

  // Lemma step requires |Lambda| < 1/2 beyond the cutoff.
  RealEnclosure half = RealEnclosure::from_rational(mpq_class(1, 2), precision);
  if (!(cap / root.pow_int(fc.search_cutoff)).certainly_less(half))
    return false;

  if (fc.gamma_cap != 2 * fc.lambda_cap) return false;

  // 1 + log(n + shift) < 1.2 log n at n = cutoff + 1 (and hence beyond;
  // the ratio decreases in n).
  RealEnclosure n =
      RealEnclosure::exact(fc.search_cutoff + 1 + spec.binet_power_shift,
                           precision);
  RealEnclosure n0 = RealEnclosure::exact(fc.search_cutoff + 1, precision);
  RealEnclosure ratio = RealEnclosure::from_rational(mpq_class(6, 5), precision);
  if (!(one + n.log()).certainly_less(ratio * n0.log())) return false;

  return true;
}

mpz_class family_bound(const EquationFamily& family, long b,
                       mpfr_prec_t precision) {
  if (b < 2) throw DomainError("family_bound requires b >= 2");
  const SequenceSpec& spec = sequence_spec(family.sequence);
  FamilyConstants fc = family_constants(family.sequence, precision);

  RealEnclosure root = dominant_root(spec.char_poly, precision);
  RealEnclosure log_root = root.log();
  RealEnclosure log_b = RealEnclosure::exact(b, precision).log();

  // B_1 = 3 log b + 3 log 2 + log(lead) = log(b1_inner * b^3).
  RealEnclosure b1 =
      RealEnclosure::exact(3L, precision) *
      log_height(HeightDescriptor::base_factor(family.sequence,
                                               family.base_sign, b),
                 precision)
          .value;
  RealEnclosure b2 = RealEnclosure::exact(3L, precision) * log_b;
  RealEnclosure b3 = log_root;

  // Matveev product with the (1 + log D) factor stripped (D = 1); beyond
  // the cutoff that factor is at most 1.2 log n (verified constant-side by
  // verify_family_constants).
  MatveevInput input{3, 3, mpz_class(1), {b1, b2, b3}};
  RealEnclosure k = matveev_bound(input);

  // n log(root) - log(cap) < k * 1.2 log n, so
  //   n / log n < 1.2 k / log root + log(cap)/(log root * log n)
  // and the trailing term is maximal at n = cutoff.
  RealEnclosure s =
      RealEnclosure::from_rational(mpq_class(6, 5), precision) * k / log_root;
  RealEnclosure slack =
      RealEnclosure::from_rational(fc.lambda_cap, precision).log() /
      (log_root * RealEnclosure::exact(fc.search_cutoff, precision).log());
  s = s + slack;

  mpz_class bound = resolve_n_bound(s);
  // The pipeline needs the analytic bound to dominate the search cutoff.
  if (bound <= fc.search_cutoff) bound = fc.search_cutoff + 1;
  return bound;
}

}  // namespace tws
