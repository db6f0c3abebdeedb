#include "doctest.h"
#include "schwarzian/report.hpp"
#include "schwarzian/suites.hpp"

using namespace schwarzian;

TEST_SUITE("reports") {

TEST_CASE("json emission") {
  CHECK(to_json({}) == "[]\n");

  const CheckReport single = CheckReport::make("s", "c", "anchor", true, "e", "a");
  const std::string json = to_json({single});
  CHECK(json.find("\"suite\":\"s\"") != std::string::npos);
  CHECK(json.find("\"check\":\"c\"") != std::string::npos);
  CHECK(json.find("\"status\":\"pass\"") != std::string::npos);
  CHECK(json.find("\"expected\":\"e\"") != std::string::npos);
  CHECK(json.find("\"actual\":\"a\"") != std::string::npos);
  CHECK(json.find("\"paper_anchor\":\"anchor\"") != std::string::npos);

  const CheckReport failing =
      CheckReport::make("genus2", "entry", "eq", false, "[[x]]", "[[y]]");
  const std::string fail_json = to_json({failing});
  CHECK(fail_json.find("\"status\":\"fail\"") != std::string::npos);
  CHECK(fail_json.find("[[x]]") != std::string::npos);
  CHECK(fail_json.find("[[y]]") != std::string::npos);
}

TEST_CASE("text emission") {
  const CheckReport pass = CheckReport::make("s", "c", "anchor", true);
  const CheckReport fail = CheckReport::make("s", "d", "anchor", false, "1", "2");
  const std::string text = to_text({pass, fail});
  CHECK(text.find("pass") != std::string::npos);
  CHECK(text.find("fail") != std::string::npos);
  CHECK(text.find("expected=1 actual=2") != std::string::npos);
  // One line per record.
  size_t lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  CHECK(lines == 2);
}

TEST_CASE("status aggregation") {
  CHECK(all_passed({}));
  CHECK(all_passed({CheckReport::make("s", "c", "a", true)}));
  CHECK(all_passed({CheckReport::skip("s", "c", "a", "note")}));
  CHECK(!all_passed({CheckReport::make("s", "c", "a", false, "e", "x")}));
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 10);
  CHECK_THROWS(run_suite("no-such-suite", SuiteOptions{}));
}

}  // TEST_SUITE
