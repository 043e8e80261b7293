#pragma once

// Machine-readable record of one verification run. The JSON layout is
// documented in docs/report-schema.md.

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace uul {

struct VerificationReport {
  std::string claim;
  std::string group;
  unsigned p = 2;
  std::string mode;  // "exhaustive", "sample", "structural"
  std::uint64_t checked_count = 0;
  bool pass = false;
  std::vector<std::string> witness;
  std::optional<std::uint64_t> seed;
  std::int64_t elapsed_ms = 0;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  std::string verdict() const { return pass ? "pass" : "fail"; }

  nlohmann::ordered_json to_json(bool with_timing = true) const {
    nlohmann::ordered_json j;
    j["claim"] = claim;
    j["group"] = group;
    j["p"] = p;
    j["mode"] = mode;
    j["checked_count"] = checked_count;
    j["verdict"] = verdict();
    j["witness"] = witness;
    if (seed) j["seed"] = *seed;
    else j["seed"] = nullptr;
    if (with_timing) j["elapsed_ms"] = elapsed_ms;
    j["details"] = details;
    return j;
  }

  static VerificationReport from_json(const nlohmann::ordered_json& j) {
    VerificationReport r;
    r.claim = j.at("claim").get<std::string>();
    r.group = j.at("group").get<std::string>();
    r.p = j.at("p").get<unsigned>();
    r.mode = j.at("mode").get<std::string>();
    r.checked_count = j.at("checked_count").get<std::uint64_t>();
    const std::string v = j.at("verdict").get<std::string>();
    if (v != "pass" && v != "fail") throw std::invalid_argument("verdict must be pass or fail");
    r.pass = v == "pass";
    r.witness = j.at("witness").get<std::vector<std::string>>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    if (j.contains("details")) r.details = j.at("details");
    return r;
  }

  /// Deterministic text rendering of the same fields.
  std::string to_text(bool with_timing = true) const {
    std::ostringstream os;
    os << claim << " [" << group << ", p=" << p << ", " << mode << "]: " << verdict() << " (" << checked_count
       << " checked";
    if (seed) os << ", seed " << *seed;
    if (with_timing) os << ", " << elapsed_ms << " ms";
    os << ")\n";
    for (const auto& w : witness) os << "  witness: " << w << "\n";
    for (const auto& [k, v] : details.items()) os << "  " << k << ": " << v.dump() << "\n";
    return os.str();
  }
};

/// Measures wall time into a report's elapsed_ms on destruction.
class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    r_.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  VerificationReport& r_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace uul
