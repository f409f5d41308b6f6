#include "latlab/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace latlab {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ExactPass: return "exact-pass";
    case Verdict::SoundOnlyPass: return "sound-only-pass";
    case Verdict::BoundaryExcluded: return "boundary-excluded";
    case Verdict::Fail: return "fail";
  }
  return "?";
}

std::size_t SuiteReport::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& c : cases)
    if (c.verdict == v) ++n;
  return n;
}

void SuiteReport::add(Verdict v, std::string name, std::string detail) {
  cases.push_back(CaseResult{std::move(name), v, std::move(detail)});
}

std::string SuiteReport::text() const {
  std::ostringstream out;
  out << "suite " << suite << ": " << cases.size() << " cases\n";
  for (const auto& c : cases) {
    out << "  [" << verdict_name(c.verdict) << "] " << c.name;
    if (!c.detail.empty()) out << " -- " << c.detail;
    out << "\n";
  }
  out << "summary: exact=" << count(Verdict::ExactPass)
      << " sound-only=" << count(Verdict::SoundOnlyPass)
      << " boundary-excluded=" << count(Verdict::BoundaryExcluded)
      << " fail=" << count(Verdict::Fail) << "\n";
  out << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string SuiteReport::json_string() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = suite;
  j["case_count"] = cases.size();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : cases) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["verdict"] = verdict_name(c.verdict);
    if (!c.detail.empty()) cj["detail"] = c.detail;
    arr.push_back(cj);
  }
  j["cases"] = arr;
  j["summary"] = {{"exact", count(Verdict::ExactPass)},
                  {"sound_only", count(Verdict::SoundOnlyPass)},
                  {"boundary_excluded", count(Verdict::BoundaryExcluded)},
                  {"fail", count(Verdict::Fail)}};
  j["passed"] = passed();
  return j.dump(2);
}

}  // namespace latlab
