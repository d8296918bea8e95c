// Command-line surface: single-instance checks, the sweep orchestrator with
// its JSONL result cache, and the built-in selftest.
//
// Exit status: 0 when every executed check holds (or is not applicable),
// 2 when at least one conjecture instance fails (the report carries an exact
// witness), 1 on usage or internal errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grasscoh/grasscoh.hpp"
#include "grasscoh/selftest.hpp"
#include "grasscoh/sweep.hpp"

namespace {

std::string default_cache_path() {
  if (const char* env = std::getenv("GRASSCOH_CACHE")) return env;
  return "grasscoh_cache.jsonl";
}

int emit_and_persist(const grasscoh::ConjectureReport& report, const std::string& cache_path) {
  std::cout << nlohmann::json(report).dump() << "\n";
  grasscoh::append_cache(cache_path, {report});
  return report.failed() ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace grasscoh;

  CLI::App app{"grasscoh: exact computations in the truncated Schur ring of a k x l box"};
  app.require_subcommand(1);
  std::string cache_path = default_cache_path();
  app.add_option("--cache", cache_path, "JSONL result cache path (default: $GRASSCOH_CACHE or ./grasscoh_cache.jsonl)");

  int k = 0, l = 0, m = 0;
  std::optional<int> opt_m;

  auto* hilb = app.add_subcommand("hilb", "print a Hilbert series: full ring, or the subalgebra generated by e_1..e_m");
  hilb->add_option("k", k)->required()->check(CLI::PositiveNumber);
  hilb->add_option("l", l)->required()->check(CLI::PositiveNumber);
  hilb->add_option("m", opt_m)->check(CLI::NonNegativeNumber);

  auto* prop5 = app.add_subcommand("prop5", "verify the rectangle q-identity at (k,l)");
  prop5->add_option("k", k)->required()->check(CLI::PositiveNumber);
  prop5->add_option("l", l)->required()->check(CLI::PositiveNumber);

  std::string claim;
  auto* check = app.add_subcommand("check", "run one conjecture checker at (k,l,m)");
  check->add_option("claim", claim)->required()->check(CLI::IsMember(conjecture_claims()));
  check->add_option("k", k)->required()->check(CLI::PositiveNumber);
  check->add_option("l", l)->required()->check(CLI::PositiveNumber);
  check->add_option("m", m)->required()->check(CLI::NonNegativeNumber);

  auto* lef = app.add_subcommand("lefschetz", "verify the hard Lefschetz isomorphisms at (k,l)");
  lef->add_option("k", k)->required()->check(CLI::PositiveNumber);
  lef->add_option("l", l)->required()->check(CLI::PositiveNumber);

  auto* lemma = app.add_subcommand("lemma-m2", "solve the degree-2 endomorphism system at (k,l)");
  lemma->add_option("k", k)->required()->check(CLI::PositiveNumber);
  lemma->add_option("l", l)->required()->check(CLI::PositiveNumber);

  auto* induction = app.add_subcommand("induction", "run the inductive-step pipeline at (k,l,m)");
  induction->add_option("k", k)->required()->check(CLI::PositiveNumber);
  induction->add_option("l", l)->required()->check(CLI::PositiveNumber);
  induction->add_option("m", m)->required()->check(CLI::NonNegativeNumber);

  SweepConfig cfg;
  std::string out_path;
  std::string m_policy = "all";
  auto* sweep = app.add_subcommand("sweep", "run checkers over a (k,l) range, caching results");
  sweep->add_option("--k-max", cfg.k_max, "largest k (default 4)");
  sweep->add_option("--l-max", cfg.l_max, "largest l (default 5)");
  sweep->add_option("--claims", cfg.claims, "claims to run (default: the five conjectures)")
      ->check(CLI::IsMember(sweepable_claims()));
  sweep->add_option("--m-policy", m_policy)->check(CLI::IsMember({"all", "boundary"}));
  sweep->add_option("--m-list", cfg.m_list, "explicit m values (overrides --m-policy)");
  sweep->add_option("--jobs", cfg.jobs, "worker threads (default 1)");
  sweep->add_option("--out", out_path, "write reports to this file instead of stdout");
  sweep->add_flag("--force", cfg.force, "recompute instances cached as holds");

  auto* selftest = app.add_subcommand("selftest", "run the oracle cross-check battery");
  (void)selftest;

  // app-level options (--cache) remain reachable after a subcommand name
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors are status 1
  }

  try {
    if (*hilb) {
      std::cout << (opt_m ? subalgebra_hilb(k, l, *opt_m) : grassmannian_hilb(k, l)).to_string()
                << "\n";
      return 0;
    }
    if (*prop5) return emit_and_persist(prop5_check(k, l), cache_path);
    if (*check) {
      if (claim == "conj1") return emit_and_persist(check_conj1(k, l, m), cache_path);
      if (claim == "conj2") return emit_and_persist(check_conj2(k, l, m), cache_path);
      if (claim == "conj3") return emit_and_persist(check_conj3(k, l, m), cache_path);
      if (claim == "conj4") return emit_and_persist(check_conj4(k, l, m), cache_path);
      return emit_and_persist(check_conj4prime(k, l, m), cache_path);
    }
    if (*lef) return emit_and_persist(check_hard_lefschetz(k, l), cache_path);
    if (*lemma) {
      const auto report = check_lemma_m2(k, l);
      if (report.verdict == Verdict::not_applicable) {
        std::cout << "not applicable: " << report.witness["precondition"].get<std::string>()
                  << "\n";
        return 0;
      }
      const auto res = solve_lemma_m2(k, l);
      std::cout << "solutions:";
      for (const auto& [x, y] : res.solutions)
        std::cout << " (" << rat_to_string(x) << ", " << rat_to_string(y) << ")";
      std::cout << "\n";
      if (res.residual_r3)
        std::cout << "residual_r3: " << rat_to_string(*res.residual_r3) << "\n";
      std::cout << "branch: " << to_string(res.branch) << "\n";
      grasscoh::append_cache(cache_path, {report});
      return report.failed() ? 2 : 0;
    }
    if (*induction) return emit_and_persist(induction_step_demo(k, l, m), cache_path);
    if (*sweep) {
      if (!cfg.m_list.empty()) cfg.m_policy = MPolicy::Explicit;
      else cfg.m_policy = m_policy == "boundary" ? MPolicy::Boundary : MPolicy::All;
      const auto cache = load_cache(cache_path);
      const auto outcome = run_sweep(cfg, cache);

      std::vector<ConjectureReport> fresh;
      for (const auto& r : outcome.reports)
        if (cfg.force || !cache.contains(cache_key(r.claim, r.k, r.l, r.m)) ||
            cache.at(cache_key(r.claim, r.k, r.l, r.m)).verdict != Verdict::holds)
          fresh.push_back(r);
      append_cache(cache_path, fresh);

      std::ofstream out_file;
      std::ostream* out = &std::cout;
      if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) throw std::runtime_error("cannot open --out file: " + out_path);
        out = &out_file;
      }
      for (const auto& r : outcome.reports) *out << nlohmann::json(r).dump() << "\n";
      std::cerr << "sweep: " << outcome.computed << " computed, " << outcome.skipped
                << " skipped (cached)\n";
      return outcome.any_failure ? 2 : 0;
    }
    if (*selftest) return run_selftest(std::cout) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
