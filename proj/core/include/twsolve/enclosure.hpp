#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <functional>
#include <memory>
#include <string>

#include "twsolve/errors.hpp"

namespace tws {

// Default working precision of newly built enclosures and first rung of
// the refinement ladder.
inline constexpr mpfr_prec_t kDefaultPrecision = 192;
// Hard ceiling of the ladder; crossing it raises PrecisionExhausted.
inline constexpr mpfr_prec_t kPrecisionCap = 1 << 16;

/// A closed interval [lo, hi] of directed-rounded MPFR floats. Every
/// operation rounds outward, so an enclosure built from enclosures of the
/// inputs always contains the exact real result. This is the only
/// representation of irrational reals in the library; comparisons against
/// exact integers/rationals are certified (true of the represented real)
/// whenever they return true.
class RealEnclosure {
 public:
  RealEnclosure();  // exact zero at default precision
  RealEnclosure(const RealEnclosure&);
  RealEnclosure(RealEnclosure&&) noexcept;
  RealEnclosure& operator=(const RealEnclosure&);
  RealEnclosure& operator=(RealEnclosure&&) noexcept;
  ~RealEnclosure();

  static RealEnclosure exact(long value, mpfr_prec_t prec = kDefaultPrecision);
  static RealEnclosure exact(const mpz_class& value,
                             mpfr_prec_t prec = kDefaultPrecision);
  // Outward-rounded image of an exact rational.
  static RealEnclosure from_rational(const mpq_class& value,
                                     mpfr_prec_t prec = kDefaultPrecision);
  static RealEnclosure from_endpoints(const mpq_class& lo, const mpq_class& hi,
                                      mpfr_prec_t prec = kDefaultPrecision);
  // Point interval holding one double (doubles are dyadic, hence exact).
  static RealEnclosure from_double(double value,
                                   mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t precision() const;

  mpfr_srcptr lo_raw() const { return lo_; }
  mpfr_srcptr hi_raw() const { return hi_; }
  double lo_double() const;  // rounded toward -inf
  double hi_double() const;  // rounded toward +inf
  // Exact dyadic value of an endpoint (endpoints are binary floats).
  mpq_class lo_rational() const;
  mpq_class hi_rational() const;

  bool is_point() const;            // lo == hi exactly
  double width_double() const;      // upper bound on hi - lo
  std::string str(int digits = 20) const;

  // --- outward-rounded arithmetic ---
  friend RealEnclosure operator+(const RealEnclosure&, const RealEnclosure&);
  friend RealEnclosure operator-(const RealEnclosure&, const RealEnclosure&);
  friend RealEnclosure operator*(const RealEnclosure&, const RealEnclosure&);
  // Throws ZeroInDivisor if the divisor straddles zero.
  friend RealEnclosure operator/(const RealEnclosure&, const RealEnclosure&);
  RealEnclosure operator-() const;
  RealEnclosure abs() const;
  RealEnclosure log() const;   // requires lo > 0
  RealEnclosure sqrt() const;  // requires lo >= 0
  RealEnclosure recip() const;
  // Integer power; requires lo > 0 unless exponent >= 0 and lo >= 0.
  RealEnclosure pow_int(long exponent) const;

  // --- certified queries (true implies true of the represented real) ---
  bool contains_zero() const;
  bool contains(const mpq_class& value) const;
  bool contains(const mpz_class& value) const;
  bool certainly_positive() const;     // lo > 0
  bool certainly_negative() const;     // hi < 0
  bool certainly_nonpositive() const;  // hi <= 0
  bool certainly_less(const RealEnclosure& o) const;  // hi < o.lo
  bool certainly_leq(const RealEnclosure& o) const;   // hi <= o.lo
  bool certainly_geq(const RealEnclosure& o) const;   // lo >= o.hi
  // Represented real certainly <= / >= the exact integer.
  bool at_most(const mpz_class& value) const;   // hi <= value
  bool at_least(const mpz_class& value) const;  // lo >= value
  // Strict containment in the open interval (a, b).
  bool strictly_inside(const mpq_class& a, const mpq_class& b) const;
  bool contained_in(const RealEnclosure& outer) const;

  // Intersection; throws DomainError when the intervals are disjoint.
  RealEnclosure intersect(const RealEnclosure& o) const;

  // floor() of each endpoint, for certified integer parts.
  mpz_class floor_lo() const;
  mpz_class floor_hi() const;
  // Integer nearest to each endpoint (ties to even).
  mpz_class round_lo() const;
  mpz_class round_hi() const;

 private:
  explicit RealEnclosure(mpfr_prec_t prec);
  void check_order() const;

  mpfr_t lo_;
  mpfr_t hi_;
};

/// A real number that can be recomputed at any precision. Holds a builder
/// (precision -> enclosure) plus the current cached enclosure; refine()
/// doubles the working precision, rebuilds, and intersects with the previous
/// enclosure so successive refinements are nested. An exactly-zero value can
/// be marked symbolically, which numeric enclosures can never certify.
class RefinableReal {
 public:
  using Builder = std::function<RealEnclosure(mpfr_prec_t)>;

  RefinableReal(Builder builder, mpfr_prec_t initial = kDefaultPrecision,
                mpfr_prec_t cap = kPrecisionCap);
  static RefinableReal exact_zero();

  bool known_zero() const;
  const RealEnclosure& current() const;
  mpfr_prec_t precision() const;
  mpfr_prec_t cap() const;

  // Double the precision and rebuild; throws PrecisionExhausted at the cap.
  const RealEnclosure& refine();
  const RealEnclosure& ensure_precision(mpfr_prec_t prec);

 private:
  struct State;
  std::shared_ptr<State> state_;
};

}  // namespace tws
