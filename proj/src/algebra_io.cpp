#include "lcoh/algebra_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lcoh/errors.hpp"

namespace lcoh {

using nlohmann::json;

namespace {

std::size_t read_index(const json& record, const char* key, std::size_t dim) {
  if (!record.contains(key) || !record[key].is_number_integer()) {
    throw ParseError(std::string("bracket record needs integer field '") + key + "'");
  }
  const auto v = record[key].get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= dim) {
    throw ParseError(std::string("index '") + key + "' out of range: " + std::to_string(v));
  }
  return static_cast<std::size_t>(v);
}

Rational read_value(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  throw ParseError("coefficient value must be a string \"p/q\" or an integer");
}

}  // namespace

LieAlgebra parse_algebra(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed algebra file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("algebra file must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0) {
    throw ParseError("algebra file needs a non-negative integer 'dim'");
  }
  const auto dim = static_cast<std::size_t>(doc["dim"].get<long long>());
  std::string name = doc.value("name", std::string("custom"));

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw ParseError("'labels' must be an array of strings");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw ParseError("'labels' must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != dim) throw ParseError("'labels' length differs from 'dim'");
  } else {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
  }

  BracketTable table(dim, std::vector<SparseVector>(dim));
  std::vector<std::vector<bool>> seen(dim, std::vector<bool>(dim, false));
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw ParseError("'brackets' must be an array");
    for (const auto& rec : doc["brackets"]) {
      if (!rec.is_object()) throw ParseError("bracket record must be an object");
      const auto i = read_index(rec, "i", dim);
      const auto j = read_index(rec, "j", dim);
      if (i > j) throw ParseError("bracket records must have i < j");
      if (seen[i][j]) throw ParseError("duplicate bracket record");
      seen[i][j] = true;
      SparseVector v;
      if (rec.contains("coeffs")) {
        if (!rec["coeffs"].is_array()) throw ParseError("'coeffs' must be an array");
        for (const auto& c : rec["coeffs"]) {
          if (!c.is_object() || !c.contains("value")) throw ParseError("coefficient record needs 'k' and 'value'");
          v.emplace_back(static_cast<std::uint32_t>(read_index(c, "k", dim)), read_value(c["value"]));
        }
      }
      normalize(v);
      if (i == j) {
        if (!v.empty()) throw JacobiViolation("antisymmetry fails: [" + labels[i] + ", " + labels[i] + "] != 0");
        continue;
      }
      SparseVector neg = v;
      for (auto& e : neg) e.second = -e.second;
      table[i][j] = std::move(v);
      table[j][i] = std::move(neg);
    }
  }
  return LieAlgebra(std::move(name), std::move(labels), std::move(table));
}

LieAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open algebra file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

std::string algebra_to_json(const LieAlgebra& algebra) {
  json doc;
  doc["name"] = algebra.name();
  doc["dim"] = algebra.dim();
  doc["labels"] = algebra.labels();
  json brackets = json::array();
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    for (std::size_t j = i + 1; j < algebra.dim(); ++j) {
      const auto& v = algebra.bracket(i, j);
      if (v.empty()) continue;
      json coeffs = json::array();
      for (const auto& [k, c] : v) coeffs.push_back({{"k", k}, {"value", to_string(c)}});
      brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
    }
  }
  doc["brackets"] = brackets;
  return doc.dump(2);
}

}  // namespace lcoh
