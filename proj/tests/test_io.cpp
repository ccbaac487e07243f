#include <sstream>
#include <vector>

#include "doctest.h"
#include "supermult/oracle.hpp"
#include "supermult/presentation.hpp"
#include "supermult/result_table.hpp"

using namespace supermult;

namespace {

const char* kH1Json = R"({
  "generators": [{"name": "x1", "parity": 0}, {"name": "x2", "parity": 1}],
  "relators": [{"bracket": [{"gen": "x2"}, {"gen": "x2"}]}],
  "class": 2
})";

// Quote-aware splitter for one CSV line.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += ch;
    }
  }
  fields.push_back(field);
  return fields;
}

}  // namespace

TEST_CASE("presentation JSON round trip") {
  auto p = presentation::presentation_from_json_text(kH1Json);
  CHECK(p.alphabet.size() == 2);
  CHECK(p.alphabet.parity(1) == 1);
  CHECK(p.relators.size() == 1);
  CHECK(p.class_bound == 2);

  auto text = presentation::presentation_to_json_text(p);
  auto reparsed = presentation::presentation_from_json_text(text);
  CHECK(reparsed.alphabet.size() == 2);
  CHECK(reparsed.relators.size() == 1);
  CHECK(oracle::multiplier_oracle(reparsed, 2).dims == SuperDim{2, 2});
}

TEST_CASE("presentation parse failures") {
  CHECK_THROWS_AS(presentation::presentation_from_json_text("not json"), ParseError);
  CHECK_THROWS_AS(presentation::presentation_from_json_text("{}"), ParseError);
  CHECK_THROWS_AS(presentation::presentation_from_json_text(
                      R"({"generators": [{"name": "x", "parity": 3}], "class": 1})"),
                  ParseError);
  CHECK_THROWS_AS(presentation::presentation_from_json_text(
                      R"({"generators": [{"name": "x", "parity": 0}],
                          "relators": [{"gen": "missing"}], "class": 1})"),
                  ParseError);
  // sums must be parity-homogeneous
  CHECK_THROWS_AS(presentation::presentation_from_json_text(
                      R"({"generators": [{"name": "x", "parity": 0}, {"name": "y", "parity": 1}],
                          "relators": [{"sum": [{"gen": "x"}, {"gen": "y"}]}], "class": 1})"),
                  ParseError);
  CHECK_THROWS_AS(presentation::load_presentation_file("/nonexistent/path.json"), ParseError);
}

TEST_CASE("scaled relators parse rationals") {
  auto p = presentation::presentation_from_json_text(
      R"({"generators": [{"name": "a", "parity": 0}, {"name": "b", "parity": 0},
                         {"name": "c", "parity": 0}],
          "relators": [{"sum": [{"bracket": [{"gen": "a"}, {"gen": "b"}]},
                                {"scale": ["-1/1", {"gen": "c"}]}]},
                       {"bracket": [{"gen": "a"}, {"gen": "c"}]},
                       {"bracket": [{"gen": "b"}, {"gen": "c"}]}],
          "class": 2})");
  // this presents the 3-dim Heisenberg algebra: M² has dimension 5
  CHECK(oracle::multiplier_oracle(p, 2).dims == SuperDim{5, 0});
}

TEST_CASE("result tables render the same numbers as JSON and CSV") {
  ResultTable table;
  table.rows.push_back({"layer(r=3)", 1, 1, 2, "super-witt-layer-sum", "closed"});
  table.rows.push_back({"SW(2,2)", 2, 0, 2, "super-witt-formula", "closed"});
  table.rows.push_back({"has,comma \"quoted\"", -1, 0, -1, "none", "oracle"});

  std::string csv = table.to_csv_text();
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "input,even,odd,total,provenance,method");
  for (const auto& row : table.rows) {
    std::string line;
    REQUIRE(std::getline(lines, line));
    auto fields = split_csv(line);
    REQUIRE(fields.size() == 6);
    CHECK(fields[0] == row.input);
    CHECK(fields[1] == std::to_string(row.even));
    CHECK(fields[2] == std::to_string(row.odd));
    CHECK(fields[3] == std::to_string(row.total));
    CHECK(fields[4] == row.provenance);
    CHECK(fields[5] == row.method);
  }

  std::string json = table.to_json_text();
  CHECK(json.find("\"even\": 1") != std::string::npos);
  CHECK(json.find("has,comma \\\"quoted\\\"") != std::string::npos);
}
