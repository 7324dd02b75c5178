#include "twsolve/reduction.hpp"

#include <algorithm>
#include <utility>

namespace tws {

namespace {
const mpz_class kZero(0);
const mpz_class kOne(1);
}  // namespace

ContinuedFraction::ContinuedFraction(RefinableReal value)
    : value_(std::move(value)) {
  expand();
}

void ContinuedFraction::expand() {
  std::vector<mpz_class> a;
  RealEnclosure x = value_.current();
  const mpfr_prec_t p = x.precision();
  while (true) {
    mpz_class fl = x.floor_lo();
    if (fl != x.floor_hi()) break;  // floor not certified
    a.push_back(fl);
    RealEnclosure frac = x - RealEnclosure::exact(fl, p);
    if (frac.contains_zero()) break;  // cannot invert; maybe rational tail
    x = frac.recip();
  }
  // Certified quotients never change across refinements.
  for (std::size_t i = 0; i < std::min(a.size(), a_.size()); ++i)
    if (a[i] != a_[i]) throw Error("continued fraction prefix changed");
  if (a.size() <= a_.size()) return;

  a_ = std::move(a);
  p_.resize(a_.size());
  q_.resize(a_.size());
  // p_{-1} = 1, p_{-2} = 0 and q_{-1} = 0, q_{-2} = 1.
  for (std::size_t k = 0; k < a_.size(); ++k) {
    const mpz_class& pk1 = k >= 1 ? p_[k - 1] : kOne;
    const mpz_class& pk2 = k >= 2 ? p_[k - 2] : (k == 1 ? kOne : kZero);
    const mpz_class& qk1 = k >= 1 ? q_[k - 1] : kZero;
    const mpz_class& qk2 = k >= 2 ? q_[k - 2] : (k == 1 ? kZero : kOne);
    p_[k] = a_[k] * pk1 + pk2;
    q_[k] = a_[k] * qk1 + qk2;
  }
}

void ContinuedFraction::ensure_count(std::size_t count) {
  while (a_.size() < count) {
    value_.refine();  // throws PrecisionExhausted at the cap
    expand();
  }
}

std::size_t ContinuedFraction::ensure_denominator_above(const mpz_class& bound) {
  for (std::size_t k = 0;; ++k) {
    ensure_count(k + 1);
    if (q_[k] > bound) return k;
  }
}

const mpz_class& ContinuedFraction::p(std::size_t k) const {
  if (k >= p_.size()) throw DomainError("convergent index out of range");
  return p_[k];
}

const mpz_class& ContinuedFraction::q(std::size_t k) const {
  if (k >= q_.size()) throw DomainError("convergent index out of range");
  return q_[k];
}

ContinuedFraction partial_quotients(RefinableReal x, std::size_t count) {
  ContinuedFraction cf(std::move(x));
  cf.ensure_count(count);
  return cf;
}

RealEnclosure nearest_integer_distance(const RealEnclosure& x) {
  mpq_class quarter(1, 4);
  mpq_class w = x.hi_rational() - x.lo_rational();
  if (w >= quarter)
    throw AmbiguousMidpoint("enclosure too wide for ||x||; refine first");
  mpz_class m = x.round_lo();
  if (m != x.round_hi())
    throw AmbiguousMidpoint("enclosure straddles a half-integer");
  return (x - RealEnclosure::exact(m, x.precision())).abs();
}

std::string to_string(ReductionMethod m) {
  return m == ReductionMethod::BakerDavenport ? "baker_davenport" : "legendre";
}

namespace {

void validate_reduction_inputs(const RealEnclosure& A, const RealEnclosure& B,
                               const mpz_class& M) {
  if (!A.certainly_positive()) throw DomainError("reduction needs A > 0");
  if (mpfr_cmp_si(B.lo_raw(), 1) <= 0) throw DomainError("reduction needs B > 1");
  if (M < 1) throw DomainError("reduction needs M >= 1");
}

// floor of the upper endpoint of log(value)/log(B), as a long.
long bound_from_log_ratio(const RealEnclosure& value, const RealEnclosure& B) {
  RealEnclosure ratio = value.log() / B.log();
  mpz_class f = ratio.floor_hi();
  if (!f.fits_slong_p()) throw DomainError("reduced bound does not fit a long");
  return f.get_si();
}

RealEnclosure point_at_lo(const RealEnclosure& e) {
  mpq_class v = e.lo_rational();
  return RealEnclosure::from_endpoints(v, v, e.precision() + 8);
}

}  // namespace

BakerDavenportResult baker_davenport(RefinableReal tau, RefinableReal mu,
                                     const RealEnclosure& A,
                                     const RealEnclosure& B, const mpz_class& M,
                                     int max_attempts) {
  if (mu.known_zero())
    throw MuDegenerate("mu = 0: inequality is homogeneous, use legendre_bound");
  validate_reduction_inputs(A, B, M);

  ContinuedFraction cf(tau);
  const std::size_t k0 = cf.ensure_denominator_above(6 * M);
  RealEnclosure m_enc = RealEnclosure::exact(M);

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const std::size_t k = k0 + static_cast<std::size_t>(attempt);
    cf.ensure_count(k + 1);
    const mpz_class& q = cf.q(k);

    for (;;) {
      bool ambiguous = false;
      try {
        const mpfr_prec_t p =
            std::max(tau.current().precision(), mu.current().precision());
        RealEnclosure qe = RealEnclosure::exact(q, p);
        RealEnclosure d_mu = nearest_integer_distance(mu.current() * qe);
        RealEnclosure d_tau = nearest_integer_distance(tau.current() * qe);
        RealEnclosure eps = d_mu - m_enc * d_tau;
        if (eps.certainly_positive()) {
          ReductionOutcome out;
          out.method = ReductionMethod::BakerDavenport;
          out.convergent_index = k;
          out.q = q;
          out.epsilon = eps;
          out.new_bound =
              bound_from_log_ratio(A * qe / point_at_lo(eps), B);
          out.tau_precision = tau.precision();
          return out;
        }
        if (eps.certainly_nonpositive()) break;  // advance to next convergent
        ambiguous = true;
      } catch (const AmbiguousMidpoint&) {
        ambiguous = true;
      }
      if (ambiguous) {
        tau.refine();  // throws PrecisionExhausted at the cap
        mu.refine();
      }
    }
  }
  return ReductionFailure{max_attempts, k0, "epsilon_nonpositive"};
}

ReductionOutcome legendre_bound(RefinableReal tau, const RealEnclosure& A,
                                const RealEnclosure& B, const mpz_class& M) {
  validate_reduction_inputs(A, B, M);
  ContinuedFraction cf(tau);
  const std::size_t n_idx = cf.ensure_denominator_above(M);
  mpz_class a_max = 0;
  for (std::size_t i = 0; i <= n_idx; ++i)
    a_max = std::max(a_max, cf.quotients()[i]);

  ReductionOutcome out;
  out.method = ReductionMethod::Legendre;
  out.convergent_index = n_idx;
  out.q = cf.q(n_idx);
  out.a_max = a_max;
  RealEnclosure inner =
      A * RealEnclosure::exact(a_max + 2) * RealEnclosure::exact(M);
  out.new_bound = bound_from_log_ratio(inner, B);
  out.tau_precision = tau.precision();
  return out;
}

}  // namespace tws
