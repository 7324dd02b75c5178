#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "twsolve/family.hpp"

namespace tws {

/// A verified solution triple: term(sequence, n) = (b +/- 1) * b^l +/- 1
/// exactly, with l >= 1 and b >= 2.
struct Solution {
  EquationFamily family;
  long n = 0;
  long b = 0;
  long l = 0;
  mpz_class value;

  bool operator==(const Solution&) const = default;
};

/// Inverts the Thabit/Williams form: returns l >= 1 such that
/// value = (b +/- 1) * b^l +/- 1, if one exists. Exact integer arithmetic
/// throughout; nonpositive intermediate values yield no solution.
std::optional<long> decompose(const mpz_class& value, long b,
                              BaseSign base_sign, TailSign tail_sign);

/// Every solution with 0 <= n <= n_max and b_min <= b <= b_max, sorted by
/// (b, n, l). Repeated sequence values yield one triple per index n.
std::vector<Solution> enumerate_solutions(const EquationFamily& family,
                                          long b_min, long b_max, long n_max);

/// Exhaustive-check certificate that no solution has lo < n <= hi.
struct GapCertificate {
  long lo = 0, hi = 0;
  long b_min = 0, b_max = 0;
  std::vector<Solution> violations;

  bool empty() const { return violations.empty(); }
};

GapCertificate verify_no_solutions_between(const EquationFamily& family,
                                           long b_min, long b_max, long lo,
                                           long hi);

}  // namespace tws
