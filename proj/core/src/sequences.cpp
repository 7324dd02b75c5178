#include "twsolve/sequences.hpp"

#include <utility>

#include "twsolve/algebraic.hpp"

namespace tws {

std::string to_string(SequenceId id) {
  switch (id) {
    case SequenceId::Padovan:
      return "padovan";
    case SequenceId::Perrin:
      return "perrin";
    case SequenceId::Narayana:
      return "narayana";
  }
  return "?";
}

mpq_class Cubic::eval(const mpq_class& x) const {
  return ((mpq_class(c3) * x + c2) * x + c1) * x + c0;
}

RealEnclosure Cubic::eval(const RealEnclosure& x) const {
  mpfr_prec_t p = x.precision();
  auto k = [&](long c) { return RealEnclosure::exact(c, p); };
  return ((k(c3) * x + k(c2)) * x + k(c1)) * x + k(c0);
}

std::string Cubic::str() const {
  auto mono = [](long c, const char* pow, bool lead) -> std::string {
    if (c == 0) return "";
    std::string s;
    if (!lead) s = c > 0 ? " + " : " - ";
    else if (c < 0) s = "-";
    long a = c > 0 ? c : -c;
    if (a != 1 || pow[0] == '\0') s += std::to_string(a);
    s += pow;
    return s;
  };
  std::string s = mono(c3, "x^3", true);
  s += mono(c2, "x^2", s.empty());
  s += mono(c1, "x", s.empty());
  s += mono(c0, "", s.empty());
  return s.empty() ? "0" : s;
}

const SequenceSpec& sequence_spec(SequenceId id) {
  static const SequenceSpec padovan{
      SequenceId::Padovan, {1, 1, 1},        {0, 1, 1},
      {1, 0, -1, -1},      {23, -23, 6, -1}, -3,
      -1,                  1,                1,
      0};
  static const SequenceSpec perrin{
      SequenceId::Perrin, {3, 0, 2},      {0, 1, 1},
      {1, 0, -1, -1},     {0, 0, 1, -1},  -2,
      1,                  2,              2,
      0};
  static const SequenceSpec narayana{
      SequenceId::Narayana, {1, 1, 1},       {1, 0, 1},
      {1, -1, 0, -1},       {31, 0, -3, -1}, -2,
      -1,                   1,               1,
      1};
  switch (id) {
    case SequenceId::Padovan:
      return padovan;
    case SequenceId::Perrin:
      return perrin;
    case SequenceId::Narayana:
      return narayana;
  }
  throw DomainError("unknown sequence id");
}

mpz_class term(const SequenceSpec& spec, long n) {
  if (n < 0) throw DomainError("negative sequence index");
  if (n < 3) return mpz_class(spec.initials[static_cast<size_t>(n)]);
  mpz_class a(spec.initials[0]), b(spec.initials[1]), c(spec.initials[2]);
  const auto [c2, c1, c0] = spec.recurrence;
  mpz_class next;
  for (long m = 3; m <= n; ++m) {
    next = c2 * c + c1 * b + c0 * a;
    a = std::move(b);
    b = std::move(c);
    c = std::move(next);
  }
  return c;
}

std::vector<mpz_class> terms_up_to(const SequenceSpec& spec, long n_max) {
  if (n_max < 0) throw DomainError("negative sequence index");
  std::vector<mpz_class> out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  for (long n = 0; n <= n_max && n < 3; ++n)
    out.emplace_back(spec.initials[static_cast<size_t>(n)]);
  const auto [c2, c1, c0] = spec.recurrence;
  for (long n = 3; n <= n_max; ++n)
    out.push_back(c2 * out[n - 1] + c1 * out[n - 2] + c0 * out[n - 3]);
  return out;
}

namespace {

// Tri-state certified comparison of interval vs exact integer.
enum class Cert { Holds, Fails, Unknown };

Cert leq_term(const RealEnclosure& e, const mpz_class& t) {
  if (e.at_most(t)) return Cert::Holds;
  if (!e.contains(t)) return Cert::Fails;  // lo > t
  return Cert::Unknown;
}

Cert geq_term(const RealEnclosure& e, const mpz_class& t) {
  if (e.at_least(t)) return Cert::Holds;
  if (!e.contains(t)) return Cert::Fails;  // hi < t
  return Cert::Unknown;
}

}  // namespace

CertificationReport check_growth_bounds(const SequenceSpec& spec, long n_max,
                                        const RealEnclosure& root) {
  if (n_max < spec.growth_valid_from)
    throw DomainError("n_max below growth_valid_from");
  CertificationReport report{spec.growth_valid_from, n_max, {}, root.precision()};

  mpfr_prec_t prec = root.precision();
  RealEnclosure r = root;
  auto terms = terms_up_to(spec, n_max);
  long n = spec.growth_valid_from;

  // Powers are taken directly per n so that a zero exponent is the exact
  // interval [1, 1]; the envelope touches the sequence there (e.g. the
  // initial 1s) and an outward product could never certify the equality.
  while (n <= n_max) {
    RealEnclosure low_pow = r.pow_int(n + spec.growth_low_offset);
    RealEnclosure high_pow = r.pow_int(n + spec.growth_high_offset);
    const mpz_class& t = terms[static_cast<size_t>(n)];
    Cert lower = leq_term(low_pow, t);    // root^(n+lo) <= T_n
    Cert upper = geq_term(high_pow, t);   // T_n <= root^(n+hi)
    if (lower == Cert::Unknown || upper == Cert::Unknown) {
      if (prec >= kPrecisionCap)
        throw PrecisionExhausted("growth bound comparison at n=" +
                                 std::to_string(n));
      prec *= 2;
      r = dominant_root(spec.char_poly, prec);
      report.max_precision_used = std::max(report.max_precision_used, prec);
      continue;
    }
    if (lower == Cert::Fails || upper == Cert::Fails)
      report.failures.push_back(n);
    ++n;
  }
  return report;
}

CertificationReport check_binet_error(const SequenceSpec& spec, long n_max,
                                      const BinetData& binet) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  CertificationReport report{1, n_max, {}, binet.root.precision()};

  mpfr_prec_t prec = binet.root.precision();
  RealEnclosure root = binet.root;
  RealEnclosure coeff = binet.coeff;
  auto terms = terms_up_to(spec, n_max);
  RealEnclosure err_coeff =
      RealEnclosure::exact(static_cast<long>(spec.binet_error_coeff), prec);

  long n = 1;
  RealEnclosure main_pow = root.pow_int(n + spec.binet_power_shift);
  while (n <= n_max) {
    const mpz_class& t = terms[static_cast<size_t>(n)];
    RealEnclosure lhs =
        (RealEnclosure::exact(t, prec) - coeff * main_pow).abs();
    // tolerance = binet_error_coeff / root^(n/2) = err / sqrt(root^n)
    RealEnclosure rhs = err_coeff / root.pow_int(n).sqrt();
    if (lhs.certainly_less(rhs)) {
      ++n;
      if (n <= n_max) main_pow = main_pow * root;
      continue;
    }
    if (rhs.certainly_leq(lhs)) {
      report.failures.push_back(n);
      ++n;
      if (n <= n_max) main_pow = main_pow * root;
      continue;
    }
    // Indeterminate: the difference T_n - coeff*root^(n+s) cancels ~n/2
    // leading bits, so escalate precision and rebuild.
    if (prec >= kPrecisionCap)
      throw PrecisionExhausted("binet error comparison at n=" +
                               std::to_string(n));
    prec *= 2;
    BinetData fresh = binet_data_for(spec, prec);
    root = fresh.root;
    coeff = fresh.coeff;
    err_coeff =
        RealEnclosure::exact(static_cast<long>(spec.binet_error_coeff), prec);
    main_pow = root.pow_int(n + spec.binet_power_shift);
    report.max_precision_used = std::max(report.max_precision_used, prec);
  }
  return report;
}

}  // namespace tws
