#pragma once

#include <string>
#include <vector>

namespace schwarzian {

/// One verification record. `paper_anchor` carries the label of the identity
/// being checked (equation or lemma tag of the companion write-up) so that a
/// failure can be traced back to its source.
struct CheckReport {
  enum class Status { Pass, Fail, Skip };

  std::string suite;
  std::string check;
  Status status = Status::Pass;
  std::string expected;
  std::string actual;
  std::string paper_anchor;

  static CheckReport make(std::string suite, std::string check, std::string anchor, bool ok,
                          std::string expected = "", std::string actual = "");
  static CheckReport skip(std::string suite, std::string check, std::string anchor,
                          std::string note);
};

const char* to_string(CheckReport::Status s);

bool all_passed(const std::vector<CheckReport>& reports);

// One aligned line per record.
std::string to_text(const std::vector<CheckReport>& reports);

// JSON array of objects whose keys are exactly the CheckReport field names,
// one record per line.
std::string to_json(const std::vector<CheckReport>& reports);

}  // namespace schwarzian
