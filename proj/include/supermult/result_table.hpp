#pragma once

#include <string>
#include <vector>

namespace supermult {

/// One computed quantity. Scalar quantities go in total; parity-split ones
/// fill even/odd as well (total = even + odd).
struct ResultRow {
  std::string input;
  long long even = 0;
  long long odd = 0;
  long long total = 0;
  std::string provenance;
  std::string method;  // "closed" | "oracle" | ...
};

struct ResultTable {
  std::vector<ResultRow> rows;

  std::string to_json_text() const;
  std::string to_csv_text() const;  // carries the same numbers as the JSON form
};

}  // namespace supermult
