#include "semiclose/io.hpp"

#include <fstream>
#include <sstream>

namespace semiclose {

FiniteSemigroup semigroup_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw InvalidArgument("JSON semigroup needs \"order\" and \"table\"");
  int order = j.at("order").get<int>();
  std::vector<std::vector<int>> rows =
      j.at("table").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(rows.size()) != order)
    throw InvalidArgument("JSON table row count does not match order");
  std::vector<std::string> names;
  if (j.contains("names")) {
    names = j.at("names").get<std::vector<std::string>>();
    if (static_cast<int>(names.size()) != order)
      throw InvalidArgument("JSON names length does not match order");
  }
  return FiniteSemigroup::from_rows(rows, std::move(names));
}

nlohmann::json semigroup_to_json(const FiniteSemigroup& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < s.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < s.order(); ++j) row.push_back(s.at(i, j));
    rows.push_back(std::move(row));
  }
  nlohmann::json j{{"order", s.order()}, {"table", std::move(rows)}};
  if (s.has_names()) j["names"] = s.names();
  return j;
}

FiniteSemigroup parse_text_table(std::istream& in) {
  int order = 0;
  if (!(in >> order) || order <= 0)
    throw InvalidArgument("text table must start with a positive order");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(order) * order);
  for (int k = 0; k < order * order; ++k) {
    int v;
    if (!(in >> v)) throw InvalidArgument("text table truncated");
    flat.push_back(v);
  }
  return FiniteSemigroup(order, std::move(flat));
}

FiniteSemigroup load_semigroup(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string content = buf.str();
  std::size_t first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw InvalidArgument("empty semigroup file: " + path);
  if (content[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument("bad JSON in " + path + ": " + e.what());
    }
    return semigroup_from_json(j);
  }
  std::istringstream text(content);
  return parse_text_table(text);
}

void save_semigroup(const FiniteSemigroup& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write file: " + path);
  out << semigroup_to_json(s).dump(2) << "\n";
}

}  // namespace semiclose
