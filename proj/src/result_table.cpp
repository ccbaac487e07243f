#include "supermult/result_table.hpp"

#include <sstream>

#include "json.hpp"

namespace supermult {

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string ResultTable::to_json_text() const {
  nlohmann::json doc;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    doc["rows"].push_back({{"input", row.input},
                           {"even", row.even},
                           {"odd", row.odd},
                           {"total", row.total},
                           {"provenance", row.provenance},
                           {"method", row.method}});
  }
  return doc.dump(2);
}

std::string ResultTable::to_csv_text() const {
  std::ostringstream out;
  out << "input,even,odd,total,provenance,method\n";
  for (const auto& row : rows) {
    out << csv_escape(row.input) << ',' << row.even << ',' << row.odd << ',' << row.total << ','
        << csv_escape(row.provenance) << ',' << csv_escape(row.method) << '\n';
  }
  return out.str();
}

}  // namespace supermult
