#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twsolve/enclosure.hpp"

namespace tws {

/// Certified continued fraction expansion of a refinable irrational.
/// Partial quotients are accepted only when the floor of the current
/// complete quotient is unambiguous at the working precision; expansion
/// transparently refines the underlying value when it is not. Convergents
/// p_k/q_k are maintained exactly.
class ContinuedFraction {
 public:
  explicit ContinuedFraction(RefinableReal value);

  // Guarantee at least `count` certified quotients; throws
  // PrecisionExhausted when the precision cap cannot disambiguate further
  // (the value may be rational).
  void ensure_count(std::size_t count);

  // Index of the first convergent with q_k > bound (expanding as needed).
  std::size_t ensure_denominator_above(const mpz_class& bound);

  std::size_t count() const { return a_.size(); }
  const std::vector<mpz_class>& quotients() const { return a_; }
  const mpz_class& p(std::size_t k) const;
  const mpz_class& q(std::size_t k) const;

  RefinableReal& value() { return value_; }
  const RefinableReal& value() const { return value_; }

 private:
  void expand();

  RefinableReal value_;
  std::vector<mpz_class> a_, p_, q_;
};

// Expansion with at least `count` certified partial quotients.
ContinuedFraction partial_quotients(RefinableReal x, std::size_t count);

/// Certified enclosure of ||x||, the distance from x to the nearest
/// integer. Requires width(x) < 1/4 and an unambiguous nearest integer;
/// otherwise throws AmbiguousMidpoint and the caller refines x.
RealEnclosure nearest_integer_distance(const RealEnclosure& x);

enum class ReductionMethod { BakerDavenport, Legendre };

std::string to_string(ReductionMethod m);

/// Certificate of one successful reduction step.
///   BakerDavenport: q > 6M, epsilon = ||mu q|| - M ||tau q|| with
///     epsilon.lo > 0, and no solution has w > new_bound.
///   Legendre: q = q_N is the first convergent denominator > M,
///     a_max = max{a_i : i <= N}, and no solution has n > new_bound.
struct ReductionOutcome {
  ReductionMethod method;
  std::size_t convergent_index = 0;
  mpz_class q;
  std::optional<RealEnclosure> epsilon;  // BakerDavenport only
  std::optional<mpz_class> a_max;        // Legendre only
  long new_bound = 0;
  mpfr_prec_t tau_precision = 0;
};

/// Non-exceptional failure: every attempted convergent had epsilon <= 0.
struct ReductionFailure {
  int attempts = 0;
  std::size_t first_index = 0;
  std::string reason;  // "epsilon_nonpositive"
};

using BakerDavenportResult = std::variant<ReductionOutcome, ReductionFailure>;

/// Dujella-Petho reduction of 0 < |u tau - v + mu| < A * B^(-w), u <= M:
/// scans convergent denominators q_k of tau starting at the first with
/// q_k > 6M, certifies the sign of epsilon = ||mu q|| - M ||tau q||, and on
/// epsilon > 0 returns new_bound = floor(log(A q / epsilon_lo) / log B_lo)
/// so that any solution has w <= new_bound. Advances past convergents with
/// certified epsilon <= 0, giving up after max_attempts. Throws MuDegenerate
/// when mu is symbolically zero (the caller should use legendre_bound).
BakerDavenportResult baker_davenport(RefinableReal tau, RefinableReal mu,
                                     const RealEnclosure& A,
                                     const RealEnclosure& B,
                                     const mpz_class& M,
                                     int max_attempts = 10);

/// Homogeneous (mu = 0) reduction of 0 < |l tau - n| < A * B^(-n), l <= M,
/// via the Legendre criterion: n/l is then a convergent of tau, so
/// B^n < A * (a(M)+2) * M where a(M) = max{a_i : i <= N} and q_N is the
/// first denominator above M. Returns new_bound accordingly.
ReductionOutcome legendre_bound(RefinableReal tau, const RealEnclosure& A,
                                const RealEnclosure& B, const mpz_class& M);

}  // namespace tws
