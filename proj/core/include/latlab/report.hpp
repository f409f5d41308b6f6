#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace latlab {

// Verdict for one checked instance. Finite truncations of infinite structures
// cannot always decide a formula exactly; every check declares its margin.
enum class Verdict {
  ExactPass,         // finite check is equivalent to the infinite statement
  SoundOnlyPass,     // truncation can lose witnesses but never invents them
  BoundaryExcluded,  // instance does not fit the truncation; not a failure
  Fail,
};

const char* verdict_name(Verdict v);

struct CaseResult {
  std::string name;    // short description including the inputs
  Verdict verdict = Verdict::ExactPass;
  std::string detail;  // optional failure/witness info
};

// Result of one verification suite run. Serialization is deterministic for a
// fixed seed and parameters; wall time is reported out of band.
struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  std::uint64_t wall_ms = 0;

  std::size_t count(Verdict v) const;
  std::size_t case_count() const { return cases.size(); }
  bool passed() const { return count(Verdict::Fail) == 0; }

  void add(Verdict v, std::string name, std::string detail = "");

  std::string text() const;         // human-readable, deterministic
  std::string json_string() const;  // versioned schema, deterministic
};

}  // namespace latlab
