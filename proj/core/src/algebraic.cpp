#include "twsolve/algebraic.hpp"

#include <algorithm>

namespace tws {

namespace {

// Exact dyadic rational of an MPFR float.
mpq_class to_rational(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return mpq_class(0);
  mpz_class mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  mpq_class q(mant);
  mpz_class scale;
  if (e >= 0) {
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(e));
    q *= mpq_class(scale);
  } else {
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    q /= mpq_class(scale);
  }
  return q;
}

size_t rational_bits(const mpq_class& q) {
  return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

RealEnclosure point_enclosure(const mpq_class& value, mpfr_prec_t precision) {
  mpfr_prec_t p = std::max<mpfr_prec_t>(precision + 64,
                                        static_cast<mpfr_prec_t>(rational_bits(value)) + 8);
  return RealEnclosure::from_endpoints(value, value, p);
}

}  // namespace

RealEnclosure dominant_root(const Cubic& f, mpfr_prec_t precision) {
  if (f.c3 <= 0) throw NotBracketed("leading coefficient must be positive");
  if (precision < 8) precision = 8;

  // Bracket (1, hi]: a unique real root > 1 exists iff f(1) < 0.
  if (f.eval(mpq_class(1)) >= 0)
    throw NotBracketed("no real root greater than 1: " + f.str());
  mpq_class lo(1), hi(2);
  while (f.eval(hi) < 0) {
    hi *= 2;
    if (hi > 1'000'000) throw NotBracketed("root bracket ran away: " + f.str());
  }
  if (f.eval(hi) == 0) return point_enclosure(hi, precision);

  // Dyadic bisection to a coarse bracket.
  const mpfr_prec_t coarse = std::min<mpfr_prec_t>(64, precision);
  mpq_class width = hi - lo;
  mpz_class coarse_den = mpz_class(1) << static_cast<unsigned long>(coarse);
  mpq_class coarse_target(mpz_class(1), coarse_den);
  while (width > coarse_target) {
    mpq_class mid = (lo + hi) / 2;
    mpq_class v = f.eval(mid);
    int s = sgn(v);
    if (s == 0) return point_enclosure(mid, precision);
    (s < 0 ? lo : hi) = mid;
    width = hi - lo;
  }
  if (precision <= coarse)
    return RealEnclosure::from_endpoints(lo, hi, precision + 64);

  // Newton refinement in plain floating point; the result is certified
  // afterwards, so rounding here cannot affect soundness.
  const mpfr_prec_t wp = precision + 96;
  mpfr_t m, fm, fpm, t;
  mpfr_init2(m, wp);
  mpfr_init2(fm, wp);
  mpfr_init2(fpm, wp);
  mpfr_init2(t, wp);
  {
    mpq_class mid = (lo + hi) / 2;
    mpfr_set_q(m, mid.get_mpq_t(), MPFR_RNDN);
  }
  int iters = 2;
  for (mpfr_prec_t have = coarse; have < precision + 32; have *= 2) ++iters;
  for (int i = 0; i < iters; ++i) {
    // fm = f(m), fpm = f'(m)
    mpfr_set_si(fm, f.c3, MPFR_RNDN);
    mpfr_mul(fm, fm, m, MPFR_RNDN);
    mpfr_add_si(fm, fm, f.c2, MPFR_RNDN);
    mpfr_mul(fm, fm, m, MPFR_RNDN);
    mpfr_add_si(fm, fm, f.c1, MPFR_RNDN);
    mpfr_mul(fm, fm, m, MPFR_RNDN);
    mpfr_add_si(fm, fm, f.c0, MPFR_RNDN);

    mpfr_set_si(fpm, 3 * f.c3, MPFR_RNDN);
    mpfr_mul(fpm, fpm, m, MPFR_RNDN);
    mpfr_add_si(fpm, fpm, 2 * f.c2, MPFR_RNDN);
    mpfr_mul(fpm, fpm, m, MPFR_RNDN);
    mpfr_add_si(fpm, fpm, f.c1, MPFR_RNDN);

    mpfr_div(t, fm, fpm, MPFR_RNDN);
    mpfr_sub(m, m, t, MPFR_RNDN);
  }
  mpq_class center = to_rational(m);
  mpfr_clears(m, fm, fpm, t, static_cast<mpfr_ptr>(nullptr));

  // Candidate [center - delta, center + delta], certified by exact signs.
  mpz_class delta_den = mpz_class(1) << static_cast<unsigned long>(precision + 1);
  mpq_class delta(mpz_class(1), delta_den);
  for (int attempt = 0; attempt < 3; ++attempt, delta *= 2) {
    mpq_class cl = center - delta, ch = center + delta;
    if (cl <= lo || ch >= hi) break;  // Newton drifted; fall back below
    mpq_class vl = f.eval(cl), vh = f.eval(ch);
    if (sgn(vl) == 0) return point_enclosure(cl, precision);
    if (sgn(vh) == 0) return point_enclosure(ch, precision);
    if (sgn(vl) < 0 && sgn(vh) > 0)
      return RealEnclosure::from_endpoints(cl, ch, precision + 64);
  }

  // Fallback: keep bisecting exactly down to the target width.
  mpz_class target_den = mpz_class(1) << static_cast<unsigned long>(precision);
  mpq_class target(mpz_class(1), target_den);
  while (hi - lo > target) {
    mpq_class mid = (lo + hi) / 2;
    int s = sgn(f.eval(mid));
    if (s == 0) return point_enclosure(mid, precision);
    (s < 0 ? lo : hi) = mid;
  }
  return RealEnclosure::from_endpoints(lo, hi, precision + 64);
}

RealEnclosure binet_coefficient(const SequenceSpec& spec,
                                const RealEnclosure& root) {
  mpfr_prec_t p = root.precision();
  RealEnclosure coeff = RealEnclosure::exact(1L, p);
  switch (spec.id) {
    case SequenceId::Padovan:
      // p = (1 + a) / (-a^2 + 3a + 1)
      coeff = (RealEnclosure::exact(1L, p) + root) /
              Cubic{0, -1, 3, 1}.eval(root);
      break;
    case SequenceId::Perrin:
      break;  // unit coefficient
    case SequenceId::Narayana:
      // C_phi = phi / ((phi - lambda)(phi - delta)) = phi / (3 phi^2 - 2 phi)
      coeff = root / Cubic{0, 3, -2, 0}.eval(root);
      break;
  }
  if (!spec.binet_coeff_minpoly.eval(coeff).contains_zero())
    throw Error("binet coefficient fails its minimal polynomial: " +
                spec.binet_coeff_minpoly.str());
  return coeff;
}

BinetData binet_data_for(const SequenceSpec& spec, mpfr_prec_t precision) {
  BinetData d;
  d.root = dominant_root(spec.char_poly, precision);
  d.coeff = binet_coefficient(spec, d.root);
  // Both characteristic cubics are monic with constant term -1, so the
  // product of all three roots is 1 and root * |conj|^2 = 1.
  if (spec.char_poly.c3 != 1 || spec.char_poly.c0 != -1)
    throw Error("conjugate modulus relation needs x^3 + ... - 1");
  d.conj_modulus = d.root.sqrt().recip();
  // The conjugates of the leading coefficient are the two complex roots of
  // its minimal polynomial; lead * coeff * |conj coeff|^2 = -c0 = 1.
  long lead = spec.binet_coeff_minpoly.c3;
  if (lead == 0) {
    d.conj_coeff_modulus = RealEnclosure::exact(1L, precision);
  } else {
    d.conj_coeff_modulus =
        (RealEnclosure::exact(lead, precision) * d.coeff).sqrt().recip();
  }
  d.power_shift = spec.binet_power_shift;
  return d;
}

HeightDescriptor HeightDescriptor::integer(mpz_class m) {
  HeightDescriptor d;
  d.kind_ = Kind::Integer;
  d.m_ = std::move(m);
  return d;
}

HeightDescriptor HeightDescriptor::dominant_root_of(SequenceId id) {
  HeightDescriptor d;
  d.kind_ = Kind::DominantRoot;
  d.id_ = id;
  return d;
}

HeightDescriptor HeightDescriptor::binet_coefficient_of(SequenceId id) {
  HeightDescriptor d;
  d.kind_ = Kind::BinetCoefficient;
  d.id_ = id;
  return d;
}

HeightDescriptor HeightDescriptor::base_factor(SequenceId id, BaseSign sign,
                                               long b) {
  HeightDescriptor d;
  d.kind_ = Kind::BaseFactor;
  d.id_ = id;
  d.sign_ = sign;
  d.b_ = b;
  return d;
}

HeightValue log_height(const HeightDescriptor& d, mpfr_prec_t precision) {
  switch (d.kind()) {
    case HeightDescriptor::Kind::Integer: {
      if (d.int_value() < 1)
        throw UnsupportedNumber("height of integer m requires m >= 1");
      return {RealEnclosure::exact(d.int_value(), precision).log(),
              "log " + d.int_value().get_str()};
    }
    case HeightDescriptor::Kind::DominantRoot: {
      const SequenceSpec& spec = sequence_spec(d.sequence());
      // Minimal polynomial is monic of degree 3 and the two conjugates lie
      // inside the unit circle, so h = log(root)/3.
      RealEnclosure root = dominant_root(spec.char_poly, precision);
      return {root.log() / RealEnclosure::exact(3L, precision),
              "log(" + to_string(spec.id) + " root)/3"};
    }
    case HeightDescriptor::Kind::BinetCoefficient: {
      const SequenceSpec& spec = sequence_spec(d.sequence());
      long lead = spec.binet_coeff_minpoly.c3;
      if (lead == 0)  // coefficient is the rational 1
        return {RealEnclosure::exact(0L, precision), "h(1) = 0"};
      // All zeros of the minimal polynomial lie strictly inside the unit
      // circle, so h = log(lead)/3.
      return {RealEnclosure::exact(lead, precision).log() /
                  RealEnclosure::exact(3L, precision),
              "log(" + std::to_string(lead) + ")/3"};
    }
    case HeightDescriptor::Kind::BaseFactor: {
      if (d.base() < 2) throw UnsupportedNumber("base factor requires b >= 2");
      // h((b +/- 1) / coeff) <= h(b +/- 1) + h(coeff)
      //                      <= log b + log 2 + h(coeff).
      HeightValue coeff_h =
          log_height(HeightDescriptor::binet_coefficient_of(d.sequence()),
                     precision);
      RealEnclosure v = RealEnclosure::exact(d.base(), precision).log() +
                        RealEnclosure::exact(2L, precision).log() +
                        coeff_h.value;
      return {v, "log b + log 2 + " + coeff_h.description};
    }
  }
  throw UnsupportedNumber("unknown height descriptor");
}

}  // namespace tws
