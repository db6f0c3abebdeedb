#include "schwarzian/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace schwarzian {

CheckReport CheckReport::make(std::string suite, std::string check, std::string anchor, bool ok,
                              std::string expected, std::string actual) {
  CheckReport r;
  r.suite = std::move(suite);
  r.check = std::move(check);
  r.status = ok ? Status::Pass : Status::Fail;
  r.expected = std::move(expected);
  r.actual = std::move(actual);
  r.paper_anchor = std::move(anchor);
  // Failing records always carry both sides.
  if (!ok && r.expected.empty()) r.expected = "exact identity";
  if (!ok && r.actual.empty()) r.actual = "identity violated";
  return r;
}

CheckReport CheckReport::skip(std::string suite, std::string check, std::string anchor,
                              std::string note) {
  CheckReport r;
  r.suite = std::move(suite);
  r.check = std::move(check);
  r.status = Status::Skip;
  r.actual = std::move(note);
  r.paper_anchor = std::move(anchor);
  return r;
}

const char* to_string(CheckReport::Status s) {
  switch (s) {
    case CheckReport::Status::Pass: return "pass";
    case CheckReport::Status::Fail: return "fail";
    case CheckReport::Status::Skip: return "skip";
  }
  return "unknown";
}

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == CheckReport::Status::Fail) return false;
  return true;
}

std::string to_text(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << std::left << std::setw(5) << to_string(r.status) << std::setw(13) << r.suite
        << std::setw(44) << r.check << "[" << r.paper_anchor << "]";
    if (r.status == CheckReport::Status::Fail)
      out << " expected=" << r.expected << " actual=" << r.actual;
    else if (r.status == CheckReport::Status::Skip && !r.actual.empty())
      out << " note=" << r.actual;
    out << "\n";
  }
  return out.str();
}

std::string to_json(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  out << "[";
  bool first = true;
  for (const auto& r : reports) {
    nlohmann::ordered_json record{{"suite", r.suite},       {"check", r.check},
                                  {"status", to_string(r.status)}, {"expected", r.expected},
                                  {"actual", r.actual},     {"paper_anchor", r.paper_anchor}};
    out << (first ? "\n" : ",\n") << record.dump();
    first = false;
  }
  out << (first ? "]" : "\n]") << "\n";
  return out.str();
}

}  // namespace schwarzian
