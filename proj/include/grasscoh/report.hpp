#pragma once

// Structured verdict for one checked claim instance.  Failing verdicts always
// carry a machine-checkable witness; not-applicable carries the violated
// precondition.

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace grasscoh {

inline constexpr const char* kEngineVersion = "grasscoh 0.1.0";

enum class Verdict { holds, fails, not_applicable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not-applicable";
  }
  throw std::logic_error("bad verdict");
}

inline Verdict verdict_from_string(const std::string& s) {
  if (s == "holds") return Verdict::holds;
  if (s == "fails") return Verdict::fails;
  if (s == "not-applicable") return Verdict::not_applicable;
  throw std::invalid_argument("unknown verdict: " + s);
}

struct ConjectureReport {
  std::string claim;            // conj1..conj4prime, prop5, lefschetz, lemma_m2, identity-check
  int k = 0;
  int l = 0;
  std::optional<int> m;         // absent for claims without an m parameter
  Verdict verdict = Verdict::holds;
  nlohmann::json witness;       // null unless there is something to carry
  std::int64_t elapsed_ms = 0;

  bool holds() const { return verdict == Verdict::holds; }
  bool failed() const { return verdict == Verdict::fails; }
};

inline void to_json(nlohmann::json& j, const ConjectureReport& r) {
  j = nlohmann::json{{"claim", r.claim},
                     {"k", r.k},
                     {"l", r.l},
                     {"m", r.m ? nlohmann::json(*r.m) : nlohmann::json(nullptr)},
                     {"verdict", to_string(r.verdict)},
                     {"witness", r.witness.is_null() ? nlohmann::json(nullptr) : r.witness},
                     {"elapsed_ms", r.elapsed_ms},
                     {"engine_version", kEngineVersion}};
}

inline void from_json(const nlohmann::json& j, ConjectureReport& r) {
  r.claim = j.at("claim").get<std::string>();
  r.k = j.at("k").get<int>();
  r.l = j.at("l").get<int>();
  r.m = j.at("m").is_null() ? std::nullopt : std::optional<int>(j.at("m").get<int>());
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.witness = j.value("witness", nlohmann::json(nullptr));
  r.elapsed_ms = j.value("elapsed_ms", std::int64_t{0});
}

// Wall-clock helper for filling elapsed_ms.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace grasscoh
