#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twsolve/family.hpp"
#include "twsolve/linear_forms.hpp"
#include "twsolve/reduction.hpp"
#include "twsolve/search.hpp"

namespace tws {

struct PipelineConfig {
  std::optional<long> n_max;  // overrides the family search cutoff
  mpfr_prec_t precision_start = kDefaultPrecision;
  mpfr_prec_t precision_cap = kPrecisionCap;
  bool check_paper = false;  // compare against the embedded expected tables
  bool parallel = true;      // run_all: one task per family
};

/// Everything the pipeline produced for one base b.
struct PerBaseRecord {
  long b = 0;
  mpz_class matveev_bound;  // certified upper bound M on n
  std::optional<ReductionOutcome> reduction;
  std::optional<ReductionFailure> reduction_failure;
  long search_limit = 0;  // inclusive n range actually searched
  std::vector<Solution> solutions;
  bool gap_verified = false;
};

struct PipelineReport {
  EquationFamily family;
  long b_min = 0, b_max = 0;
  std::vector<PerBaseRecord> per_b;
  std::string version;
  mpfr_prec_t precision_start = 0;
  mpfr_prec_t precision_cap = 0;
  mpfr_prec_t max_precision_used = 0;
  // Set when check_paper was requested: solutions match the expected table
  // restricted to [b_min, b_max].
  std::optional<bool> matches_expected;

  bool reductions_ok() const;
  bool gaps_ok() const;
  std::vector<Solution> all_solutions() const;  // sorted by (b, n, l)
};

// tau = log b / log root for the family's sequence.
RefinableReal make_tau(SequenceId id, long b, const PipelineConfig& config = {});

// mu = log((b +/- 1) / coeff) / log root; symbolically zero exactly for the
// unit-coefficient sequence with b - 1 = 1 (Perrin, Williams forms, b = 2).
RefinableReal make_mu(const EquationFamily& family, long b,
                      const PipelineConfig& config = {});

/// Full per-family workflow: for each b compute the Matveev bound, build
/// tau/mu/A/B, reduce (Baker-Davenport, falling back to the Legendre branch
/// when mu is symbolically zero), search exhaustively up to
/// max(cutoff, new_bound + 1), and verify the gap between the reduced bound
/// and the search limit is free of solutions. Per-b reduction failures are
/// recorded, not thrown.
PipelineReport run_family(const EquationFamily& family, long b_min, long b_max,
                          const PipelineConfig& config = {});

// All twelve families, in all_families() order.
std::vector<PipelineReport> run_all(long b_min, long b_max,
                                    const PipelineConfig& config = {});

/// Exit status: 0 ok, 3 a reduction or gap verification failed,
/// 4 solutions disagree with the expected tables (check_paper runs only).
int aggregate_status(const std::vector<PipelineReport>& reports);

// Stable JSON certificate (one document per family; keys sorted, big
// integers as decimal strings). reports_json emits a JSON array.
std::string report_json(const PipelineReport& report);
std::string reports_json(const std::vector<PipelineReport>& reports);

// Human-readable per-family summary table.
std::string report_summary(const PipelineReport& report);

/// The expected solution tables for 2 <= b <= 10 (41+ triples across the
/// twelve families), used by check_paper and the acceptance suite.
struct Triple {
  long n = 0, b = 0, l = 0;
  auto operator<=>(const Triple&) const = default;
};

const std::vector<Triple>& expected_solutions(const EquationFamily& family);

// Expected triples restricted to a base range, sorted by (b, n, l).
std::vector<Triple> expected_solutions_in_range(const EquationFamily& family,
                                                long b_min, long b_max);

}  // namespace tws
