#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "twsolve/enclosure.hpp"

namespace tws {

enum class SequenceId { Padovan, Perrin, Narayana };

std::string to_string(SequenceId id);

// c3*x^3 + c2*x^2 + c1*x + c0 with small integer coefficients.
struct Cubic {
  long c3 = 0, c2 = 0, c1 = 0, c0 = 0;

  mpq_class eval(const mpq_class& x) const;
  RealEnclosure eval(const RealEnclosure& x) const;
  std::string str() const;
  bool operator==(const Cubic&) const = default;
};

/// Everything the pipeline needs to know about one ternary recurrence:
/// initial values, recurrence coefficients, characteristic polynomial,
/// the minimal polynomial of the leading Binet coefficient, and the
/// exponent window of the growth envelope root^(n+lo) <= T_n <= root^(n+hi).
///
/// binet_power_shift records the exponent offset of the leading Binet term:
/// T_n = coeff * root^(n + shift) + (conjugate part). For the (1,1,1)
/// initial values of the Narayana recurrence the leading term is
/// C_phi * phi^(n+1), so the shift is 1; it is 0 for the other two.
struct SequenceSpec {
  SequenceId id;
  std::array<long, 3> initials;    // T_0, T_1, T_2
  std::array<long, 3> recurrence;  // {c2, c1, c0}: T_{m+3} = c2*T_{m+2} + c1*T_{m+1} + c0*T_m
  Cubic char_poly;
  Cubic binet_coeff_minpoly;  // x - 1 when the coefficient is 1 (Perrin)
  int growth_low_offset;
  int growth_high_offset;
  int binet_error_coeff;
  long growth_valid_from;
  int binet_power_shift;
};

const SequenceSpec& sequence_spec(SequenceId id);

// Exact n-th term by iterating the recurrence; constant space.
mpz_class term(const SequenceSpec& spec, long n);

// Terms T_0..T_{n_max} in one pass.
std::vector<mpz_class> terms_up_to(const SequenceSpec& spec, long n_max);

/// Outcome of certifying a per-n family of inequalities over a range.
/// `failures` holds the n whose inequality is certifiably violated;
/// indeterminate comparisons escalate precision internally and raise
/// PrecisionExhausted at the cap instead of being reported as failures.
struct CertificationReport {
  long from_n = 0;
  long to_n = 0;
  std::vector<long> failures;
  mpfr_prec_t max_precision_used = 0;

  bool all_passed() const { return failures.empty(); }
};

// Certifies root^(n+low_offset) <= T_n <= root^(n+high_offset) for every n
// in [growth_valid_from, n_max], with outward-rounded interval powers.
CertificationReport check_growth_bounds(const SequenceSpec& spec, long n_max,
                                        const RealEnclosure& root);

struct BinetData;  // algebraic.hpp

// Certifies |T_n - coeff*root^(n+shift)| < binet_error_coeff / root^(n/2)
// for 1 <= n <= n_max.
CertificationReport check_binet_error(const SequenceSpec& spec, long n_max,
                                      const BinetData& binet);

}  // namespace tws
