#include "qwb/report.hpp"

#include <sstream>

#include <json.hpp>

namespace qwb {

void Report::expect(bool ok, const std::string& witness) {
  ++cases_total;
  if (!ok) {
    ++cases_failed;
    if (witnesses.size() < 50) witnesses.push_back(witness);
  }
}

void Report::merge(const Report& sub) {
  cases_total += sub.cases_total;
  cases_failed += sub.cases_failed;
  for (const auto& w : sub.witnesses)
    if (witnesses.size() < 50) witnesses.push_back(w);
  for (const auto& l : sub.lines) lines.push_back(l);
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["structure"] = structure;
  j["suite"] = suite;
  j["cases_total"] = cases_total;
  j["cases_failed"] = cases_failed;
  j["witnesses"] = witnesses;
  j["millis"] = millis;
  if (!lines.empty()) j["detail"] = lines;
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command;
  if (!structure.empty()) os << ' ' << structure;
  if (!suite.empty()) os << " [" << suite << ']';
  os << ": " << (cases_failed == 0 ? "PASS" : "FAIL") << " ("
     << cases_total - cases_failed << '/' << cases_total << " checks, "
     << millis << " ms)\n";
  for (const auto& l : lines) os << "  " << l << '\n';
  for (const auto& w : witnesses) os << "  witness: " << w << '\n';
  return os.str();
}

}  // namespace qwb
