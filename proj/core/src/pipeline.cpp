#include "twsolve/pipeline.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "twsolve/algebraic.hpp"
#include "twsolve/version.hpp"

namespace tws {

namespace {

using nlohmann::json;

std::string mpfr_decimal(mpfr_srcptr x, int digits = 30) {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Re", digits, x) < 0) return "?";
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

PerBaseRecord process_base(const EquationFamily& family, long b,
                           const FamilyConstants& fc,
                           const PipelineConfig& cfg) {
  PerBaseRecord rec;
  rec.b = b;
  rec.matveev_bound = family_bound(family, b, cfg.precision_start);

  const SequenceSpec& spec = sequence_spec(family.sequence);
  RefinableReal tau = make_tau(family.sequence, b, cfg);
  RefinableReal mu = make_mu(family, b, cfg);
  RealEnclosure B = dominant_root(spec.char_poly, cfg.precision_start);

  try {
    auto result = baker_davenport(tau, mu, fc.reduction_A, B, rec.matveev_bound);
    if (auto* out = std::get_if<ReductionOutcome>(&result))
      rec.reduction = *out;
    else
      rec.reduction_failure = std::get<ReductionFailure>(result);
  } catch (const MuDegenerate&) {
    rec.reduction = legendre_bound(tau, fc.reduction_A, B, rec.matveev_bound);
  }

  const long cutoff = cfg.n_max.value_or(fc.search_cutoff);
  long limit = cutoff;
  if (rec.reduction) limit = std::max(cutoff, rec.reduction->new_bound + 1);
  rec.search_limit = limit;
  rec.solutions = enumerate_solutions(family, b, b, limit);
  if (rec.reduction) {
    long gap_lo = std::clamp(rec.reduction->new_bound, 0L, limit);
    rec.gap_verified =
        verify_no_solutions_between(family, b, b, gap_lo, limit).empty();
  }
  return rec;
}

}  // namespace

RefinableReal make_tau(SequenceId id, long b, const PipelineConfig& config) {
  Cubic poly = sequence_spec(id).char_poly;
  return RefinableReal(
      [poly, b](mpfr_prec_t p) {
        return RealEnclosure::exact(b, p).log() /
               dominant_root(poly, p).log();
      },
      config.precision_start, config.precision_cap);
}

RefinableReal make_mu(const EquationFamily& family, long b,
                      const PipelineConfig& config) {
  const SequenceSpec& spec = sequence_spec(family.sequence);
  const long base_value = family.base_sign == BaseSign::Plus ? b + 1 : b - 1;
  // mu = log((b +/- 1) / coeff) / log(root); identically zero exactly when
  // the coefficient is the rational 1 (Perrin) and b - 1 = 1. A numeric
  // enclosure of zero could never certify that, so it is decided here.
  if (spec.binet_coeff_minpoly.c3 == 0 && base_value == 1)
    return RefinableReal::exact_zero();
  Cubic poly = spec.char_poly;
  SequenceId id = family.sequence;
  return RefinableReal(
      [poly, id, base_value](mpfr_prec_t p) {
        RealEnclosure root = dominant_root(poly, p);
        RealEnclosure coeff = binet_coefficient(sequence_spec(id), root);
        return (RealEnclosure::exact(base_value, p) / coeff).log() /
               root.log();
      },
      config.precision_start, config.precision_cap);
}

bool PipelineReport::reductions_ok() const {
  return std::all_of(per_b.begin(), per_b.end(),
                     [](const PerBaseRecord& r) { return r.reduction.has_value(); });
}

bool PipelineReport::gaps_ok() const {
  return std::all_of(per_b.begin(), per_b.end(),
                     [](const PerBaseRecord& r) { return r.gap_verified; });
}

std::vector<Solution> PipelineReport::all_solutions() const {
  std::vector<Solution> out;
  for (const auto& rec : per_b)
    out.insert(out.end(), rec.solutions.begin(), rec.solutions.end());
  std::sort(out.begin(), out.end(), [](const Solution& x, const Solution& y) {
    return std::tie(x.b, x.n, x.l) < std::tie(y.b, y.n, y.l);
  });
  return out;
}

PipelineReport run_family(const EquationFamily& family, long b_min, long b_max,
                          const PipelineConfig& config) {
  if (b_min < 2) throw ConfigError("b_min must be >= 2");
  if (b_min > b_max) throw ConfigError("empty base range");

  PipelineReport rep;
  rep.family = family;
  rep.b_min = b_min;
  rep.b_max = b_max;
  rep.version = kVersion;
  rep.precision_start = config.precision_start;
  rep.precision_cap = config.precision_cap;
  rep.max_precision_used = config.precision_start;

  FamilyConstants fc = family_constants(family.sequence, config.precision_start);
  for (long b = b_min; b <= b_max; ++b) {
    PerBaseRecord rec = process_base(family, b, fc, config);
    if (rec.reduction)
      rep.max_precision_used =
          std::max(rep.max_precision_used, rec.reduction->tau_precision);
    rep.per_b.push_back(std::move(rec));
  }

  if (config.check_paper) {
    const long cap_b = std::min<long>(b_max, 10);
    auto expected = expected_solutions_in_range(family, b_min, cap_b);
    std::vector<Triple> got;
    for (const auto& s : rep.all_solutions())
      if (s.b <= 10) got.push_back({s.n, s.b, s.l});
    rep.matches_expected = (got == expected);
  }
  return rep;
}

std::vector<PipelineReport> run_all(long b_min, long b_max,
                                    const PipelineConfig& config) {
  if (b_min < 2) throw ConfigError("b_min must be >= 2");
  if (b_min > b_max) throw ConfigError("empty base range");

  const auto& fams = all_families();
  std::vector<PipelineReport> reports;
  reports.reserve(fams.size());
  if (config.parallel) {
    std::vector<std::future<PipelineReport>> futures;
    futures.reserve(fams.size());
    for (const auto& fam : fams)
      futures.push_back(std::async(std::launch::async, [&, fam] {
        return run_family(fam, b_min, b_max, config);
      }));
    for (auto& f : futures) reports.push_back(f.get());
  } else {
    for (const auto& fam : fams)
      reports.push_back(run_family(fam, b_min, b_max, config));
  }
  return reports;
}

int aggregate_status(const std::vector<PipelineReport>& reports) {
  for (const auto& r : reports)
    if (!r.reductions_ok() || !r.gaps_ok()) return 3;
  for (const auto& r : reports)
    if (r.matches_expected.has_value() && !*r.matches_expected) return 4;
  return 0;
}

namespace {

json reduction_to_json(const PerBaseRecord& rec) {
  json j;
  if (rec.reduction) {
    const auto& red = *rec.reduction;
    j["method"] = to_string(red.method);
    j["convergent_index"] = red.convergent_index;
    j["q"] = red.q.get_str();
    j["epsilon_lo"] = red.epsilon
                          ? json(mpfr_decimal(red.epsilon->lo_raw()))
                          : json(nullptr);
    j["a_max"] = red.a_max ? json(red.a_max->get_si()) : json(nullptr);
    j["new_bound"] = red.new_bound;
  } else if (rec.reduction_failure) {
    j["method"] = "baker_davenport";
    j["failed"] = true;
    j["reason"] = rec.reduction_failure->reason;
    j["attempts"] = rec.reduction_failure->attempts;
    j["first_index"] = rec.reduction_failure->first_index;
  }
  return j;
}

json report_to_json_value(const PipelineReport& rep) {
  json j;
  j["family"] = {{"sequence", to_string(rep.family.sequence)},
                 {"base_sign", to_string(rep.family.base_sign)},
                 {"tail_sign", to_string(rep.family.tail_sign)}};
  j["per_b"] = json::array();
  for (const auto& rec : rep.per_b) {
    json e;
    e["b"] = rec.b;
    e["matveev_bound"] = rec.matveev_bound.get_str();
    e["reduction"] = reduction_to_json(rec);
    e["solutions"] = json::array();
    for (const auto& s : rec.solutions)
      e["solutions"].push_back({{"n", s.n},
                                {"b", s.b},
                                {"l", s.l},
                                {"value", s.value.get_str()}});
    e["gap_verified"] = rec.gap_verified;
    e["search_limit"] = rec.search_limit;
    j["per_b"].push_back(std::move(e));
  }
  j["version"] = rep.version;
  j["precision"] = {{"start_bits", rep.precision_start},
                    {"cap_bits", rep.precision_cap},
                    {"max_used_bits", rep.max_precision_used}};
  if (rep.matches_expected) j["matches_expected"] = *rep.matches_expected;
  return j;
}

}  // namespace

std::string report_json(const PipelineReport& report) {
  return report_to_json_value(report).dump(2);
}

std::string reports_json(const std::vector<PipelineReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json_value(r));
  return arr.dump(2);
}

std::string report_summary(const PipelineReport& rep) {
  std::ostringstream os;
  os << "family: " << rep.family.name() << "   " << rep.family.equation()
     << "   b in [" << rep.b_min << ", " << rep.b_max << "]\n";
  os << "  b   M (bound on n)      reduction        k    bound  gap  solutions\n";
  for (const auto& rec : rep.per_b) {
    std::string bs = std::to_string(rec.b);
    os << "  " << bs;
    for (size_t i = bs.size(); i < 3; ++i) os << ' ';
    std::string m = rec.matveev_bound.get_str();
    os << " " << m;
    for (size_t i = m.size(); i < 19; ++i) os << ' ';
    if (rec.reduction) {
      std::string meth = to_string(rec.reduction->method);
      os << meth;
      for (size_t i = meth.size(); i < 15; ++i) os << ' ';
      std::string k = std::to_string(rec.reduction->convergent_index);
      os << "  " << k;
      for (size_t i = k.size(); i < 3; ++i) os << ' ';
      std::string nb = std::to_string(rec.reduction->new_bound);
      os << "  " << nb;
      for (size_t i = nb.size(); i < 5; ++i) os << ' ';
      os << (rec.gap_verified ? "ok " : "BAD");
    } else {
      os << "  REDUCTION FAILED (" << rec.reduction_failure->reason << ")";
    }
    os << "  ";
    for (const auto& s : rec.solutions)
      os << "(" << s.n << "," << s.b << "," << s.l << ") ";
    os << "\n";
  }
  os << "  solutions:";
  for (const auto& s : rep.all_solutions())
    os << " (" << s.n << "," << s.b << "," << s.l << ")=" << s.value.get_str();
  os << "\n";
  if (rep.matches_expected)
    os << "  expected-table match: " << (*rep.matches_expected ? "yes" : "NO")
       << "\n";
  return os.str();
}

}  // namespace tws
