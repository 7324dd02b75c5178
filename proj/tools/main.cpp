// twsolve: solves T_n = (b +/- 1) * b^l +/- 1 for the Padovan, Perrin and
// Narayana's cows sequences with certified bounds, continued-fraction
// reduction and exhaustive search, emitting machine-checkable certificates.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twsolve/pipeline.hpp"
#include "twsolve/version.hpp"

using namespace tws;

namespace {

struct Options {
  std::string sequence;
  std::string form;
  std::string kind;
  long b_min = 2;
  long b_max = 10;
  long n_max = -1;
  long precision_cap = 0;
  bool check_paper = false;
  bool sequential = false;
  std::string out;
};

void add_common_flags(CLI::App* sub, Options& opt) {
  sub->add_option("--sequence", opt.sequence, "Sequence to solve over")
      ->check(CLI::IsMember({"padovan", "perrin", "narayana"}));
  sub->add_option("--form", opt.form, "Thabit (b+1) or Williams (b-1) form")
      ->check(CLI::IsMember({"thabit", "williams"}));
  sub->add_option("--kind", opt.kind, "Trailing sign: first (-1) or second (+1)")
      ->check(CLI::IsMember({"first", "second"}));
  sub->add_option("--b-min", opt.b_min, "Smallest base b (>= 2)");
  sub->add_option("--b-max", opt.b_max, "Largest base b");
  sub->add_option("--n-max", opt.n_max, "Override the per-family search cutoff");
  sub->add_option("--precision-cap", opt.precision_cap,
                  "Refinement ladder ceiling in bits");
  sub->add_flag("--check-paper", opt.check_paper,
                "Compare solutions against the embedded expected tables");
  sub->add_flag("--sequential", opt.sequential, "Disable per-family threads");
  sub->add_option("--out", opt.out, "Write a JSON certificate to this file");
}

std::vector<EquationFamily> selected_families(const Options& opt) {
  std::vector<EquationFamily> out;
  for (const auto& f : all_families()) {
    if (!opt.sequence.empty() && to_string(f.sequence) != opt.sequence) continue;
    if (!opt.form.empty() &&
        (opt.form == "thabit") != (f.base_sign == BaseSign::Plus))
      continue;
    if (!opt.kind.empty() &&
        (opt.kind == "first") != (f.tail_sign == TailSign::Minus))
      continue;
    out.push_back(f);
  }
  return out;
}

PipelineConfig make_config(const Options& opt) {
  PipelineConfig cfg;
  if (opt.n_max >= 0) cfg.n_max = opt.n_max;
  if (opt.precision_cap > 0)
    cfg.precision_cap = static_cast<mpfr_prec_t>(opt.precision_cap);
  cfg.check_paper = opt.check_paper;
  cfg.parallel = !opt.sequential;
  return cfg;
}

void validate_range(const Options& opt) {
  if (opt.b_min < 2) throw ConfigError("--b-min must be at least 2");
  if (opt.b_min > opt.b_max) throw ConfigError("empty base range");
  if (opt.precision_cap > 0 && opt.precision_cap < kDefaultPrecision)
    throw ConfigError("--precision-cap must be at least " +
                      std::to_string(kDefaultPrecision) + " bits");
  if (opt.b_max > 10)
    std::cerr << "note: b > 10 has no expected solution table; bounds and "
                 "reduction are recomputed from the general formulas\n";
}

void write_file(const std::string& path, const std::string& payload) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file: " + path);
  f << payload;
}

int cmd_solve(const Options& opt) {
  validate_range(opt);
  PipelineConfig cfg = make_config(opt);
  std::vector<PipelineReport> reports;
  for (const auto& fam : selected_families(opt))
    reports.push_back(run_family(fam, opt.b_min, opt.b_max, cfg));
  for (const auto& rep : reports) std::cout << report_summary(rep) << "\n";
  if (!opt.out.empty()) write_file(opt.out, reports_json(reports) + "\n");
  return aggregate_status(reports);
}

int cmd_bound(const Options& opt) {
  validate_range(opt);
  nlohmann::json arr = nlohmann::json::array();
  std::vector<SequenceId> seqs;
  for (const auto& fam : selected_families(opt)) {
    if (std::find(seqs.begin(), seqs.end(), fam.sequence) != seqs.end())
      continue;
    seqs.push_back(fam.sequence);
    EquationFamily f{fam.sequence, BaseSign::Plus, TailSign::Minus};
    for (long b = opt.b_min; b <= opt.b_max; ++b) {
      mpz_class m = family_bound(f, b);
      std::printf("%-9s b=%-3ld n < %s\n", to_string(fam.sequence).c_str(), b,
                  m.get_str().c_str());
      arr.push_back({{"sequence", to_string(fam.sequence)},
                     {"b", b},
                     {"bound", m.get_str()}});
    }
  }
  if (!opt.out.empty()) write_file(opt.out, arr.dump(2) + "\n");
  return 0;
}

int cmd_reduce(const Options& opt) {
  validate_range(opt);
  PipelineConfig cfg = make_config(opt);
  nlohmann::json arr = nlohmann::json::array();
  bool any_failed = false;
  for (const auto& fam : selected_families(opt)) {
    FamilyConstants fc = family_constants(fam.sequence, cfg.precision_start);
    RealEnclosure B =
        dominant_root(sequence_spec(fam.sequence).char_poly, cfg.precision_start);
    for (long b = opt.b_min; b <= opt.b_max; ++b) {
      mpz_class M = family_bound(fam, b, cfg.precision_start);
      RefinableReal tau = make_tau(fam.sequence, b, cfg);
      RefinableReal mu = make_mu(fam, b, cfg);
      nlohmann::json e{{"family", fam.name()}, {"b", b}, {"M", M.get_str()}};
      try {
        auto res = baker_davenport(tau, mu, fc.reduction_A, B, M);
        if (auto* out = std::get_if<ReductionOutcome>(&res)) {
          std::printf("%-26s b=%-3ld %s k=%zu q=%s bound=%ld\n",
                      fam.name().c_str(), b, to_string(out->method).c_str(),
                      out->convergent_index, out->q.get_str().c_str(),
                      out->new_bound);
          e["method"] = to_string(out->method);
          e["convergent_index"] = out->convergent_index;
          e["new_bound"] = out->new_bound;
        } else {
          auto& fail = std::get<ReductionFailure>(res);
          std::printf("%-26s b=%-3ld FAILED (%s after %d convergents)\n",
                      fam.name().c_str(), b, fail.reason.c_str(), fail.attempts);
          e["failed"] = fail.reason;
          any_failed = true;
        }
      } catch (const MuDegenerate&) {
        auto out = legendre_bound(tau, fc.reduction_A, B, M);
        std::printf("%-26s b=%-3ld %s N=%zu a(M)=%s bound=%ld\n",
                    fam.name().c_str(), b, to_string(out.method).c_str(),
                    out.convergent_index, out.a_max->get_str().c_str(),
                    out.new_bound);
        e["method"] = to_string(out.method);
        e["convergent_index"] = out.convergent_index;
        e["a_max"] = out.a_max->get_si();
        e["new_bound"] = out.new_bound;
      }
      arr.push_back(std::move(e));
    }
  }
  if (!opt.out.empty()) write_file(opt.out, arr.dump(2) + "\n");
  return any_failed ? 3 : 0;
}

int cmd_search(const Options& opt) {
  validate_range(opt);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& fam : selected_families(opt)) {
    long n_max = opt.n_max >= 0 ? opt.n_max
                                : family_constants(fam.sequence).search_cutoff;
    auto sols = enumerate_solutions(fam, opt.b_min, opt.b_max, n_max);
    std::printf("%-26s %s: %zu solution(s)\n", fam.name().c_str(),
                fam.equation().c_str(), sols.size());
    for (const auto& s : sols) {
      std::printf("  (n=%ld, b=%ld, l=%ld)  value=%s\n", s.n, s.b, s.l,
                  s.value.get_str().c_str());
      arr.push_back({{"family", fam.name()},
                     {"n", s.n},
                     {"b", s.b},
                     {"l", s.l},
                     {"value", s.value.get_str()}});
    }
  }
  if (!opt.out.empty()) write_file(opt.out, arr.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified solver for P_n, E_n, N_n = (b +/- 1) * b^l +/- 1"};
  app.set_version_flag("--version", std::string("twsolve ") + kVersion);
  app.require_subcommand(1);

  Options opt;
  auto* solve = app.add_subcommand(
      "solve", "Bound, reduce, search and verify one or more families");
  auto* bound = app.add_subcommand(
      "bound", "Print the certified Matveev bound on n per sequence and base");
  auto* reduce = app.add_subcommand(
      "reduce", "Run only the continued-fraction reduction step");
  auto* search = app.add_subcommand(
      "search", "Exhaustively enumerate solutions up to the cutoff");
  for (auto* sub : {solve, bound, reduce, search}) add_common_flags(sub, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(opt);
    if (bound->parsed()) return cmd_bound(opt);
    if (reduce->parsed()) return cmd_reduce(opt);
    if (search->parsed()) return cmd_search(opt);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
