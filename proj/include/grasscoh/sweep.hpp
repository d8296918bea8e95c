#pragma once

// Sweep orchestration: instance generation over (claim, k, l, m), a JSONL
// result cache with last-write-wins semantics, and a work-stealing parallel
// runner.  Instances are pure computations, so execution order never affects
// the emitted reports; results are sorted by (k, l, m, claim) before writing.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "grasscoh/endo.hpp"
#include "grasscoh/filtration.hpp"
#include "grasscoh/lefschetz.hpp"
#include "grasscoh/qseries.hpp"
#include "grasscoh/report.hpp"

namespace grasscoh {

inline const std::vector<std::string>& conjecture_claims() {
  static const std::vector<std::string> claims = {"conj1", "conj2", "conj3", "conj4",
                                                  "conj4prime"};
  return claims;
}

inline const std::vector<std::string>& sweepable_claims() {
  static const std::vector<std::string> claims = {"conj1",      "conj2",    "conj3",
                                                  "conj4",      "conj4prime", "prop5",
                                                  "lefschetz",  "lemma_m2"};
  return claims;
}

struct Instance {
  std::string claim;
  int k = 0;
  int l = 0;
  std::optional<int> m;
};

enum class MPolicy { All, Boundary, Explicit };

struct SweepConfig {
  int k_max = 4;
  int l_max = 5;
  std::vector<std::string> claims = conjecture_claims();
  MPolicy m_policy = MPolicy::All;
  std::vector<int> m_list;  // used when m_policy == Explicit
  int jobs = 1;
  bool force = false;
};

inline ConjectureReport run_instance(const Instance& inst) {
  const int m = inst.m.value_or(-1);
  if (inst.claim == "conj1") return check_conj1(inst.k, inst.l, m);
  if (inst.claim == "conj2") return check_conj2(inst.k, inst.l, m);
  if (inst.claim == "conj3") return check_conj3(inst.k, inst.l, m);
  if (inst.claim == "conj4") return check_conj4(inst.k, inst.l, m);
  if (inst.claim == "conj4prime") return check_conj4prime(inst.k, inst.l, m);
  if (inst.claim == "prop5") return prop5_check(inst.k, inst.l);
  if (inst.claim == "lefschetz") return check_hard_lefschetz(inst.k, inst.l);
  if (inst.claim == "lemma_m2") return check_lemma_m2(inst.k, inst.l);
  throw std::invalid_argument("unknown claim: " + inst.claim);
}

namespace detail {

inline bool claim_has_m(const std::string& claim) {
  return claim.rfind("conj", 0) == 0;
}

inline std::vector<int> m_range_for(const std::string& claim, int k) {
  std::vector<int> ms;
  int lo = 0;
  if (claim == "conj2" || claim == "conj3") lo = 1;
  else if (claim == "conj4" || claim == "conj4prime") lo = 3;
  for (int m = lo; m <= k; ++m) ms.push_back(m);
  return ms;
}

}  // namespace detail

inline std::vector<Instance> generate_instances(const SweepConfig& cfg) {
  std::vector<Instance> out;
  for (int k = 1; k <= cfg.k_max; ++k)
    for (int l = 1; l <= cfg.l_max; ++l)
      for (const auto& claim : cfg.claims) {
        if (!detail::claim_has_m(claim)) {
          out.push_back({claim, k, l, std::nullopt});
          continue;
        }
        auto ms = detail::m_range_for(claim, k);
        if (cfg.m_policy == MPolicy::Boundary) {
          std::vector<int> keep;
          for (int m : ms)
            if (m == std::max(1, ms.front()) || m == k) keep.push_back(m);
          ms = keep;
        } else if (cfg.m_policy == MPolicy::Explicit) {
          std::vector<int> keep;
          for (int m : ms)
            if (std::find(cfg.m_list.begin(), cfg.m_list.end(), m) != cfg.m_list.end())
              keep.push_back(m);
          ms = keep;
        }
        for (int m : ms) out.push_back({claim, k, l, m});
      }
  return out;
}

inline std::string cache_key(const std::string& claim, int k, int l, std::optional<int> m) {
  std::ostringstream s;
  s << claim << "/" << k << "/" << l << "/";
  if (m) s << *m;
  else s << "null";
  return s.str();
}

// One JSON object per line; later lines win.  Corrupted lines are skipped
// with a warning and the load continues.
inline std::map<std::string, ConjectureReport> load_cache(const std::string& path,
                                                          std::ostream& warnings = std::cerr) {
  std::map<std::string, ConjectureReport> cache;
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const ConjectureReport r = nlohmann::json::parse(line).get<ConjectureReport>();
      cache[cache_key(r.claim, r.k, r.l, r.m)] = r;
    } catch (const std::exception& e) {
      warnings << "warning: ignoring corrupted cache line " << lineno << " in " << path
               << ": " << e.what() << "\n";
    }
  }
  return cache;
}

inline void append_cache(const std::string& path, const std::vector<ConjectureReport>& reports) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache for writing: " + path);
  for (const auto& r : reports) out << nlohmann::json(r).dump() << "\n";
}

inline bool report_order(const ConjectureReport& a, const ConjectureReport& b) {
  const int ma = a.m.value_or(-1), mb = b.m.value_or(-1);
  return std::tie(a.k, a.l, ma, a.claim) < std::tie(b.k, b.l, mb, b.claim);
}

struct SweepOutcome {
  std::vector<ConjectureReport> reports;  // full instance list, sorted
  std::size_t computed = 0;
  std::size_t skipped = 0;                // served from cache
  bool any_failure = false;
};

// Runs every instance not already cached as "holds" (unless forced), logging
// one line per instance.  Workers pull from a shared index; merging is
// deterministic regardless of scheduling.
inline SweepOutcome run_sweep(const SweepConfig& cfg,
                              const std::map<std::string, ConjectureReport>& cache,
                              std::ostream& log = std::cerr) {
  const std::vector<Instance> instances = generate_instances(cfg);
  std::vector<std::optional<ConjectureReport>> slots(instances.size());
  SweepOutcome outcome;

  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    const auto it = cache.find(cache_key(inst.claim, inst.k, inst.l, inst.m));
    if (!cfg.force && it != cache.end() && it->second.verdict == Verdict::holds) {
      slots[i] = it->second;
      ++outcome.skipped;
      log << "[" << inst.claim << " k=" << inst.k << " l=" << inst.l;
      if (inst.m) log << " m=" << *inst.m;
      log << "] skipped (cached holds)\n";
    } else {
      todo.push_back(i);
    }
  }

  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= todo.size()) return;
      const std::size_t i = todo[t];
      ConjectureReport r = run_instance(instances[i]);
      {
        std::lock_guard<std::mutex> lock(log_mutex);
        log << "[" << r.claim << " k=" << r.k << " l=" << r.l;
        if (r.m) log << " m=" << *r.m;
        log << "] " << to_string(r.verdict) << " (" << r.elapsed_ms << " ms)\n";
      }
      slots[i] = std::move(r);
    }
  };
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, cfg.jobs));
  if (jobs == 1 || todo.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(jobs, todo.size()); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  outcome.computed = todo.size();
  for (auto& s : slots) outcome.reports.push_back(std::move(*s));
  std::sort(outcome.reports.begin(), outcome.reports.end(), report_order);
  for (const auto& r : outcome.reports)
    if (r.failed()) outcome.any_failure = true;
  return outcome;
}

}  // namespace grasscoh
