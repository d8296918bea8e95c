#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "grasscoh/sweep.hpp"

using namespace grasscoh;

namespace {

// strip the wall-clock field so runs can be compared byte for byte
nlohmann::json normalized(const std::vector<ConjectureReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j = r;
    j["elapsed_ms"] = 0;
    arr.push_back(j);
  }
  return arr;
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) { std::remove(path.c_str()); }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("report json schema", "[sweep]") {
  ConjectureReport r;
  r.claim = "conj1";
  r.k = 2;
  r.l = 3;
  r.m = 1;
  r.verdict = Verdict::holds;
  r.elapsed_ms = 5;
  const nlohmann::json j = r;
  const std::vector<std::string> keys = {"claim", "elapsed_ms", "engine_version",
                                         "k",     "l",          "m",
                                         "verdict", "witness"};
  REQUIRE(j.size() == keys.size());
  for (const auto& key : keys) CHECK(j.contains(key));
  CHECK(j["verdict"] == "holds");
  CHECK(j["witness"].is_null());
  CHECK(j["engine_version"] == kEngineVersion);
  CHECK(j.get<ConjectureReport>().claim == "conj1");

  ConjectureReport p = prop5_check(2, 2);
  CHECK(nlohmann::json(p)["m"].is_null());
}

TEST_CASE("instance generation respects claim-specific m ranges", "[sweep]") {
  SweepConfig cfg;
  cfg.k_max = 3;
  cfg.l_max = 2;
  cfg.claims = {"conj1", "conj4", "prop5"};
  const auto instances = generate_instances(cfg);
  int conj1_count = 0, conj4_count = 0, prop5_count = 0;
  for (const auto& inst : instances) {
    if (inst.claim == "conj1") {
      ++conj1_count;
      CHECK(inst.m.value() >= 0);
      CHECK(inst.m.value() <= inst.k);
    } else if (inst.claim == "conj4") {
      ++conj4_count;
      CHECK(inst.m.value() >= 3);
    } else {
      ++prop5_count;
      CHECK_FALSE(inst.m.has_value());
    }
  }
  CHECK(conj1_count == 2 * (2 + 3 + 4));  // m in 0..k, two l values
  CHECK(conj4_count == 2);                // only k = 3 admits m = 3
  CHECK(prop5_count == 6);
}

TEST_CASE("boundary and explicit m policies", "[sweep]") {
  SweepConfig cfg;
  cfg.k_max = 4;
  cfg.l_max = 1;
  cfg.claims = {"conj1"};
  cfg.m_policy = MPolicy::Boundary;
  for (const auto& inst : generate_instances(cfg))
    CHECK((inst.m == 1 || inst.m == inst.k));

  cfg.m_policy = MPolicy::Explicit;
  cfg.m_list = {2};
  const auto insts = generate_instances(cfg);
  REQUIRE(insts.size() == 3);  // k = 2, 3, 4
  for (const auto& inst : insts) CHECK(inst.m == 2);
}

TEST_CASE("run_instance dispatch", "[sweep]") {
  CHECK(run_instance({"conj1", 2, 2, 2}).holds());
  CHECK(run_instance({"conj2", 2, 2, 2}).holds());
  CHECK(run_instance({"conj3", 2, 2, 2}).holds());
  CHECK(run_instance({"conj4", 2, 2, 3}).verdict == Verdict::not_applicable);
  CHECK(run_instance({"conj4prime", 3, 3, 3}).holds());
  CHECK(run_instance({"prop5", 2, 3, std::nullopt}).holds());
  CHECK(run_instance({"lefschetz", 2, 2, std::nullopt}).holds());
  CHECK(run_instance({"lemma_m2", 2, 3, std::nullopt}).holds());
  CHECK_THROWS_AS(run_instance({"conj9", 2, 2, 1}), std::invalid_argument);
}

TEST_CASE("cache is keyed, last write wins, corrupt lines skipped", "[sweep]") {
  TempFile tmp("test_sweep_cache.jsonl");

  ConjectureReport a = check_conj1(2, 2, 1);
  append_cache(tmp.path, {a});
  ConjectureReport b = a;
  b.verdict = Verdict::fails;
  b.witness = {{"difference", nlohmann::json::object()}};
  append_cache(tmp.path, {b});
  {
    std::ofstream f(tmp.path, std::ios::app);
    f << "not json at all\n";
  }

  std::ostringstream warnings;
  const auto cache = load_cache(tmp.path, warnings);
  REQUIRE(cache.size() == 1);
  CHECK(cache.at(cache_key("conj1", 2, 2, 1)).verdict == Verdict::fails);
  CHECK(warnings.str().find("ignoring corrupted cache line 3") != std::string::npos);

  CHECK(load_cache("no_such_file.jsonl").empty());
}

TEST_CASE("sweep results are deterministic and cache-aware", "[sweep]") {
  SweepConfig cfg;
  cfg.k_max = 2;
  cfg.l_max = 2;
  cfg.claims = {"conj1", "conj2"};

  std::ostringstream quiet;
  const auto cold = run_sweep(cfg, {}, quiet);
  CHECK(cold.skipped == 0);
  CHECK(cold.computed == cold.reports.size());
  CHECK_FALSE(cold.any_failure);
  CHECK(std::is_sorted(cold.reports.begin(), cold.reports.end(), report_order));

  // warm run: everything served from cache, bytes identical
  std::map<std::string, ConjectureReport> cache;
  for (const auto& r : cold.reports) cache[cache_key(r.claim, r.k, r.l, r.m)] = r;
  const auto warm = run_sweep(cfg, cache, quiet);
  CHECK(warm.computed == 0);
  CHECK(warm.skipped == warm.reports.size());
  nlohmann::json cold_json = nlohmann::json::array(), warm_json = nlohmann::json::array();
  for (const auto& r : cold.reports) cold_json.push_back(r);
  for (const auto& r : warm.reports) warm_json.push_back(r);
  CHECK(cold_json.dump() == warm_json.dump());

  // parallel run agrees up to wall-clock fields
  cfg.jobs = 4;
  const auto parallel = run_sweep(cfg, {}, quiet);
  CHECK(normalized(parallel.reports).dump() == normalized(cold.reports).dump());

  // force recomputes everything even with a full cache
  cfg.jobs = 1;
  cfg.force = true;
  const auto forced = run_sweep(cfg, cache, quiet);
  CHECK(forced.computed == forced.reports.size());
}

TEST_CASE("only cached holds are skipped", "[sweep]") {
  SweepConfig cfg;
  cfg.k_max = 2;
  cfg.l_max = 1;
  cfg.claims = {"conj3"};  // (2,1,2) is not applicable: k*l - m^2 + 1 < 0

  std::ostringstream quiet;
  const auto cold = run_sweep(cfg, {}, quiet);
  std::map<std::string, ConjectureReport> cache;
  std::size_t not_holds = 0;
  for (const auto& r : cold.reports) {
    cache[cache_key(r.claim, r.k, r.l, r.m)] = r;
    if (r.verdict != Verdict::holds) ++not_holds;
  }
  REQUIRE(not_holds == 1);
  const auto warm = run_sweep(cfg, cache, quiet);
  CHECK(warm.computed == not_holds);  // the not-applicable instance reruns
  CHECK(warm.skipped == warm.reports.size() - not_holds);
}
