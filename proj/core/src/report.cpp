#include "ptk/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace ptk {

namespace {

nlohmann::ordered_json report_json(const Report& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["instances"] = r.instances;
  j["passes"] = r.passes;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json jf;
    jf["input"] = f.input;
    jf["expected"] = f.expected;
    jf["actual"] = f.actual;
    arr.push_back(std::move(jf));
  }
  j["failures"] = std::move(arr);
  j["ms"] = with_timing ? r.ms : 0;
  return j;
}

}  // namespace

std::string Report::to_json(bool with_timing) const {
  return report_json(*this, with_timing).dump(2);
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << (pass() ? "PASS" : "FAIL") << "  " << suite << "  instances=" << instances
     << " passes=" << passes << " failures=" << failures.size() << " seed=" << seed
     << " ms=" << ms << '\n';
  for (const auto& n : notes) os << "  note: " << n << '\n';
  std::size_t shown = 0;
  for (const auto& f : failures) {
    if (shown++ == 10) {
      os << "  ... " << (failures.size() - 10) << " more failure(s)\n";
      break;
    }
    os << "  failure: input=" << f.input << "\n    expected=" << f.expected
       << "\n    actual=" << f.actual << '\n';
  }
  return os.str();
}

std::string reports_to_json(const std::vector<Report>& reports, bool with_timing) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r, with_timing));
  return arr.dump(2);
}

}  // namespace ptk
