#include "twsolve/search.hpp"

#include <algorithm>

namespace tws {

std::string to_string(BaseSign s) { return s == BaseSign::Plus ? "plus" : "minus"; }

std::string to_string(TailSign s) { return s == TailSign::Plus ? "plus" : "minus"; }

std::string EquationFamily::name() const {
  std::string form = base_sign == BaseSign::Plus ? "thabit" : "williams";
  std::string kind = tail_sign == TailSign::Minus ? "first" : "second";
  return to_string(sequence) + " " + form + "-" + kind;
}

std::string EquationFamily::equation() const {
  const char* t;
  switch (sequence) {
    case SequenceId::Padovan: t = "P_n"; break;
    case SequenceId::Perrin: t = "E_n"; break;
    default: t = "N_n"; break;
  }
  std::string s = t;
  s += " = (b";
  s += base_sign == BaseSign::Plus ? "+1" : "-1";
  s += ")*b^l ";
  s += tail_sign == TailSign::Plus ? "+ 1" : "- 1";
  return s;
}

const std::vector<EquationFamily>& all_families() {
  static const std::vector<EquationFamily> fams = [] {
    std::vector<EquationFamily> v;
    for (auto seq : {SequenceId::Padovan, SequenceId::Perrin, SequenceId::Narayana})
      for (auto base : {BaseSign::Plus, BaseSign::Minus})
        for (auto tail : {TailSign::Minus, TailSign::Plus})
          v.push_back({seq, base, tail});
    return v;
  }();
  return fams;
}

std::optional<long> decompose(const mpz_class& value, long b,
                              BaseSign base_sign, TailSign tail_sign) {
  if (b < 2) throw DomainError("decompose requires b >= 2");
  // Undo the trailing +/- 1, then the (b +/- 1) factor, then peel powers
  // of b. Everything exact; l = 0 never counts.
  mpz_class t = tail_sign == TailSign::Plus ? mpz_class(value - 1)
                                            : mpz_class(value + 1);
  if (t <= 0) return std::nullopt;
  const long base = base_sign == BaseSign::Plus ? b + 1 : b - 1;
  if (!mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(base)))
    return std::nullopt;
  mpz_class u = t / base;
  long l = 0;
  while (mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(b))) {
    u /= b;
    ++l;
  }
  if (u != 1 || l < 1) return std::nullopt;
  return l;
}

std::vector<Solution> enumerate_solutions(const EquationFamily& family,
                                          long b_min, long b_max, long n_max) {
  if (b_min < 2 || b_min > b_max) throw ConfigError("invalid base range");
  if (n_max < 0) throw ConfigError("n_max must be >= 0");

  const SequenceSpec& spec = sequence_spec(family.sequence);
  std::vector<Solution> out;
  mpz_class a(spec.initials[0]), b_t(spec.initials[1]), c(spec.initials[2]);
  const auto [c2, c1, c0] = spec.recurrence;
  for (long n = 0; n <= n_max; ++n) {
    const mpz_class& t = n == 0 ? a : n == 1 ? b_t : c;
    for (long b = b_min; b <= b_max; ++b) {
      if (auto l = decompose(t, b, family.base_sign, family.tail_sign))
        out.push_back({family, n, b, *l, t});
    }
    if (n >= 2) {
      mpz_class next = c2 * c + c1 * b_t + c0 * a;
      a = b_t;
      b_t = c;
      c = std::move(next);
    }
  }
  std::sort(out.begin(), out.end(), [](const Solution& x, const Solution& y) {
    return std::tie(x.b, x.n, x.l) < std::tie(y.b, y.n, y.l);
  });
  return out;
}

GapCertificate verify_no_solutions_between(const EquationFamily& family,
                                           long b_min, long b_max, long lo,
                                           long hi) {
  if (lo > hi) throw ConfigError("gap range reversed");
  GapCertificate cert{lo, hi, b_min, b_max, {}};
  if (lo == hi) return cert;  // the range (lo, hi] is empty
  auto found = enumerate_solutions(family, b_min, b_max, hi);
  for (auto& s : found)
    if (s.n > lo) cert.violations.push_back(std::move(s));
  return cert;
}

}  // namespace tws
