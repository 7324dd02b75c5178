#include "twsolve/enclosure.hpp"

#include <algorithm>
#include <utility>

namespace tws {

namespace {

mpfr_prec_t max_prec(const RealEnclosure& a, const RealEnclosure& b) {
  return std::max(a.precision(), b.precision());
}

// Exact rational value of a finite MPFR float.
mpq_class mpfr_to_rational(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return mpq_class(0);
  mpz_class mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  mpq_class q(mant);
  if (e >= 0) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(e));
    q *= mpq_class(scale);
  } else {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    q /= mpq_class(scale);
  }
  return q;
}

}  // namespace

RealEnclosure::RealEnclosure(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

RealEnclosure::RealEnclosure() : RealEnclosure(kDefaultPrecision) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealEnclosure::RealEnclosure(const RealEnclosure& o) {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealEnclosure::RealEnclosure(RealEnclosure&& o) noexcept {
  mpfr_init2(lo_, 2);
  mpfr_init2(hi_, 2);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

RealEnclosure& RealEnclosure::operator=(const RealEnclosure& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

RealEnclosure& RealEnclosure::operator=(RealEnclosure&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

RealEnclosure::~RealEnclosure() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void RealEnclosure::check_order() const {
  if (mpfr_cmp(lo_, hi_) > 0) throw Error("enclosure endpoints out of order");
}

RealEnclosure RealEnclosure::exact(long value, mpfr_prec_t prec) {
  RealEnclosure r(prec);
  mpfr_set_si(r.lo_, value, MPFR_RNDD);
  mpfr_set_si(r.hi_, value, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::exact(const mpz_class& value, mpfr_prec_t prec) {
  RealEnclosure r(prec);
  mpfr_set_z(r.lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, value.get_mpz_t(), MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::from_rational(const mpq_class& value,
                                           mpfr_prec_t prec) {
  RealEnclosure r(prec);
  mpfr_set_q(r.lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, value.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::from_endpoints(const mpq_class& lo,
                                            const mpq_class& hi,
                                            mpfr_prec_t prec) {
  RealEnclosure r(prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  r.check_order();
  return r;
}

RealEnclosure RealEnclosure::from_double(double value, mpfr_prec_t prec) {
  RealEnclosure r(prec);
  mpfr_set_d(r.lo_, value, MPFR_RNDD);
  mpfr_set_d(r.hi_, value, MPFR_RNDU);
  return r;
}

mpfr_prec_t RealEnclosure::precision() const { return mpfr_get_prec(lo_); }

double RealEnclosure::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }

double RealEnclosure::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

mpq_class RealEnclosure::lo_rational() const { return mpfr_to_rational(lo_); }

mpq_class RealEnclosure::hi_rational() const { return mpfr_to_rational(hi_); }

bool RealEnclosure::is_point() const { return mpfr_equal_p(lo_, hi_); }

double RealEnclosure::width_double() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

std::string RealEnclosure::str(int digits) const {
  char* s = nullptr;
  int rc = mpfr_asprintf(&s, "[%.*Rg, %.*Rg]", digits, lo_, digits, hi_);
  if (rc < 0) return "[?, ?]";
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

RealEnclosure operator+(const RealEnclosure& a, const RealEnclosure& b) {
  RealEnclosure r(max_prec(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

RealEnclosure operator-(const RealEnclosure& a, const RealEnclosure& b) {
  RealEnclosure r(max_prec(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

RealEnclosure operator*(const RealEnclosure& a, const RealEnclosure& b) {
  // General sign handling: min/max over the four endpoint products,
  // each computed with both rounding directions.
  RealEnclosure r(max_prec(a, b));
  mpfr_t t;
  mpfr_init2(t, r.precision());
  mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto* x : xs) {
    for (auto* y : ys) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

RealEnclosure operator/(const RealEnclosure& a, const RealEnclosure& b) {
  if (b.contains_zero()) throw ZeroInDivisor("interval divisor encloses zero");
  return a * b.recip();
}

RealEnclosure RealEnclosure::operator-() const {
  RealEnclosure r(precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::abs() const {
  RealEnclosure r(precision());
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  // straddles zero
  mpfr_set_zero(r.lo_, 1);
  mpfr_t t;
  mpfr_init2(t, precision());
  mpfr_neg(t, lo_, MPFR_RNDU);
  if (mpfr_cmp(t, hi_) > 0)
    mpfr_set(r.hi_, t, MPFR_RNDU);
  else
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

RealEnclosure RealEnclosure::log() const {
  if (mpfr_sgn(lo_) <= 0) throw DomainError("log of enclosure with lo <= 0");
  RealEnclosure r(precision());
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw DomainError("sqrt of enclosure with lo < 0");
  RealEnclosure r(precision());
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::recip() const {
  if (contains_zero()) throw ZeroInDivisor("reciprocal of enclosure of zero");
  RealEnclosure r(precision());
  mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
  mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
  return r;
}

RealEnclosure RealEnclosure::pow_int(long exponent) const {
  if (exponent == 0) return exact(1, precision());
  if (exponent < 0) return pow_int(-exponent).recip();
  if (mpfr_sgn(lo_) < 0)
    throw DomainError("pow_int of enclosure with negative lo");
  RealEnclosure r(precision());
  mpfr_pow_ui(r.lo_, lo_, static_cast<unsigned long>(exponent), MPFR_RNDD);
  mpfr_pow_ui(r.hi_, hi_, static_cast<unsigned long>(exponent), MPFR_RNDU);
  return r;
}

bool RealEnclosure::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool RealEnclosure::contains(const mpq_class& value) const {
  return mpfr_cmp_q(lo_, value.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi_, value.get_mpq_t()) >= 0;
}

bool RealEnclosure::contains(const mpz_class& value) const {
  return mpfr_cmp_z(lo_, value.get_mpz_t()) <= 0 &&
         mpfr_cmp_z(hi_, value.get_mpz_t()) >= 0;
}

bool RealEnclosure::certainly_positive() const { return mpfr_sgn(lo_) > 0; }

bool RealEnclosure::certainly_negative() const { return mpfr_sgn(hi_) < 0; }

bool RealEnclosure::certainly_nonpositive() const { return mpfr_sgn(hi_) <= 0; }

bool RealEnclosure::certainly_less(const RealEnclosure& o) const {
  return mpfr_cmp(hi_, o.lo_) < 0;
}

bool RealEnclosure::certainly_leq(const RealEnclosure& o) const {
  return mpfr_cmp(hi_, o.lo_) <= 0;
}

bool RealEnclosure::certainly_geq(const RealEnclosure& o) const {
  return mpfr_cmp(lo_, o.hi_) >= 0;
}

bool RealEnclosure::at_most(const mpz_class& value) const {
  return mpfr_cmp_z(hi_, value.get_mpz_t()) <= 0;
}

bool RealEnclosure::at_least(const mpz_class& value) const {
  return mpfr_cmp_z(lo_, value.get_mpz_t()) >= 0;
}

bool RealEnclosure::strictly_inside(const mpq_class& a,
                                    const mpq_class& b) const {
  return mpfr_cmp_q(lo_, a.get_mpq_t()) > 0 &&
         mpfr_cmp_q(hi_, b.get_mpq_t()) < 0;
}

bool RealEnclosure::contained_in(const RealEnclosure& outer) const {
  return mpfr_cmp(outer.lo_, lo_) <= 0 && mpfr_cmp(hi_, outer.hi_) <= 0;
}

RealEnclosure RealEnclosure::intersect(const RealEnclosure& o) const {
  RealEnclosure r(max_prec(*this, o));
  mpfr_set(r.lo_, mpfr_cmp(lo_, o.lo_) >= 0 ? lo_ : o.lo_, MPFR_RNDD);
  mpfr_set(r.hi_, mpfr_cmp(hi_, o.hi_) <= 0 ? hi_ : o.hi_, MPFR_RNDU);
  if (mpfr_cmp(r.lo_, r.hi_) > 0)
    throw DomainError("intersection of disjoint enclosures");
  return r;
}

mpz_class RealEnclosure::floor_lo() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDD);
  return z;
}

mpz_class RealEnclosure::floor_hi() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDD);
  return z;
}

mpz_class RealEnclosure::round_lo() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDN);
  return z;
}

mpz_class RealEnclosure::round_hi() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDN);
  return z;
}

// ---------------------------------------------------------------------------

struct RefinableReal::State {
  Builder builder;
  mpfr_prec_t prec = kDefaultPrecision;
  mpfr_prec_t cap = kPrecisionCap;
  bool zero = false;
  RealEnclosure value;
};

RefinableReal::RefinableReal(Builder builder, mpfr_prec_t initial,
                             mpfr_prec_t cap)
    : state_(std::make_shared<State>()) {
  state_->builder = std::move(builder);
  state_->prec = initial;
  state_->cap = cap;
  state_->value = state_->builder(initial);
}

RefinableReal RefinableReal::exact_zero() {
  RefinableReal r([](mpfr_prec_t p) { return RealEnclosure::exact(0L, p); });
  r.state_->zero = true;
  return r;
}

bool RefinableReal::known_zero() const { return state_->zero; }

const RealEnclosure& RefinableReal::current() const { return state_->value; }

mpfr_prec_t RefinableReal::precision() const { return state_->prec; }

mpfr_prec_t RefinableReal::cap() const { return state_->cap; }

const RealEnclosure& RefinableReal::refine() {
  if (state_->zero) return state_->value;
  if (state_->prec >= state_->cap)
    throw PrecisionExhausted("refinement past precision cap (" +
                             std::to_string(state_->cap) + " bits)");
  state_->prec = std::min<mpfr_prec_t>(state_->prec * 2, state_->cap);
  // Intersecting with the previous enclosure keeps refinements nested.
  state_->value = state_->builder(state_->prec).intersect(state_->value);
  return state_->value;
}

const RealEnclosure& RefinableReal::ensure_precision(mpfr_prec_t prec) {
  while (state_->prec < prec && !state_->zero) refine();
  return state_->value;
}

}  // namespace tws
