#pragma once

#include <gmpxx.h>

#include <vector>

#include "twsolve/algebraic.hpp"
#include "twsolve/enclosure.hpp"
#include "twsolve/family.hpp"

namespace tws {

/// Inputs of the lower bound for linear forms in s logarithms over a field
/// of degree `degree`: exponent bound D and the per-number height bounds B_j.
struct MatveevInput {
  int s = 3;
  int degree = 3;
  mpz_class max_exponent{1};  // D
  std::vector<RealEnclosure> height_bounds;
};

/// Enclosure of
///   1.4 * 30^(s+3) * s^4.5 * degree^2 * (1 + log degree) * (1 + log D)
///     * B_1 * ... * B_s,
/// the -log|Lambda| bound. Monotone nondecreasing in D and in every B_j.
RealEnclosure matveev_bound(const MatveevInput& input);

/// Smallest certified integer x* with x* >= 2*S*log(S): every x with
/// x/log x < S then satisfies x < x* (valid for S >= 4; the pipeline uses
/// S >= 16). Throws DomainError when S is certifiably too small for the
/// formula to mean anything (S <= 1.35).
mpz_class resolve_n_bound(const RealEnclosure& S);

/// Analytic constants of one sequence family:
///   lambda_cap     |Lambda| < lambda_cap / root^n beyond the cutoff
///   gamma_cap      |Gamma|  < gamma_cap  / root^n (= 2 * lambda_cap)
///   reduction_A    gamma_cap / log(root), the A of the reduction step
///   b1_inner       B_1 = log(b1_inner * b^3)
///   search_cutoff  exhaustive search range; the analytic argument assumes
///                  n > search_cutoff
struct FamilyConstants {
  SequenceId sequence;
  mpq_class lambda_cap;
  mpq_class gamma_cap;
  RealEnclosure reduction_A;
  long b1_inner_constant;
  long search_cutoff;
};

FamilyConstants family_constants(SequenceId id,
                                 mpfr_prec_t precision = kDefaultPrecision);

/// Soft re-derivation of the capped constants from the Binet error bounds:
///   (err_coeff * root^(-cutoff/2) + 1) / (coeff * root^shift) <= lambda_cap
///   gamma_cap == 2 * lambda_cap and lambda_cap / root^cutoff < 1/2
///   1 + log(n + shift) < 1.2 log(n) at n = cutoff + 1
/// Returns false if any certified check fails.
bool verify_family_constants(const FamilyConstants& fc,
                             mpfr_prec_t precision = kDefaultPrecision);

/// Certified integer N such that any solution of the family's equation with
/// b as given has n < N. Assembles the Matveev input (B_1 = log(inner*b^3),
/// B_2 = 3 log b, B_3 = log root), folds the (1 + log D) factor into
/// 1.2 log n as valid beyond the search cutoff, and resolves through
/// resolve_n_bound.
mpz_class family_bound(const EquationFamily& family, long b,
                       mpfr_prec_t precision = kDefaultPrecision);

}  // namespace tws
