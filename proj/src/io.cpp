#include "smz/io.hpp"

#include <stdexcept>

namespace smz {

std::string tableau_str(const Tableau<int>& t) {
  const SkewShape& s = t.shape();
  std::string out = "[";
  int k = 0;
  for (int i = 1; i <= s.rows(); ++i) {
    if (i > 1) out += ";";
    for (int j = 1; j <= s.row_end(i); ++j) {
      if (j > 1) out += ",";
      out += j < s.row_begin(i) ? "." : std::to_string(t[k++]);
    }
  }
  return out + "]";
}

namespace {

Tableau<int> from_row_array(const nlohmann::json& rows) {
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("tableau rows must be a non-empty array");
  std::vector<int> outer, inner;
  std::vector<std::vector<int>> vals;
  for (const auto& row : rows) {
    if (!row.is_array()) throw std::invalid_argument("tableau row must be an array");
    int lead = 0;
    while (lead < static_cast<int>(row.size()) && row[lead].is_null()) ++lead;
    std::vector<int> v;
    for (std::size_t j = lead; j < row.size(); ++j) {
      if (!row[j].is_number_integer()) throw std::invalid_argument("tableau entries must be integers after leading nulls");
      v.push_back(row[j].get<int>());
    }
    outer.push_back(static_cast<int>(row.size()));
    inner.push_back(lead);
    vals.push_back(std::move(v));
  }
  SkewShape s{Partition(outer), Partition(inner)};
  return Tableau<int>::from_rows(s, vals);
}

}  // namespace

Tableau<int> tableau_from_json(const nlohmann::json& j) {
  if (j.is_array()) return from_row_array(j);
  if (!j.is_object()) throw std::invalid_argument("tableau must be an object or an array of rows");
  if (j.contains("rows")) return from_row_array(j.at("rows"));
  if (j.contains("shape") && j.contains("values")) {
    SkewShape s = parse_shape(j.at("shape").get<std::string>());
    auto v = j.at("values").get<std::vector<int>>();
    if (static_cast<int>(v.size()) != s.size()) throw std::invalid_argument("tableau: value count does not match shape");
    return Tableau<int>(s, v);
  }
  throw std::invalid_argument("tableau: expected \"rows\" or \"shape\" and \"values\"");
}

nlohmann::json tableau_to_json(const Tableau<int>& t) {
  const SkewShape& s = t.shape();
  nlohmann::json rows = nlohmann::json::array();
  int k = 0;
  for (int i = 1; i <= s.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= s.row_end(i); ++j) row.push_back(j < s.row_begin(i) ? nlohmann::json() : nlohmann::json(t[k++]));
    rows.push_back(row);
  }
  return {{"shape", s.str()}, {"rows", rows}};
}

std::map<int, int> diag_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("diagonal map must be an object like {\"0\": 2}");
  std::map<int, int> a;
  for (auto it = j.begin(); it != j.end(); ++it) a[std::stoi(it.key())] = it.value().get<int>();
  return a;
}

}  // namespace smz
