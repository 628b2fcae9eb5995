#include "herd/model_io.hpp"

#include <string>

#include "json.hpp"

#include "herd/errors.hpp"

namespace herd {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw InvalidInputError("model " + path + ": " + message);
}

Rational parse_rational_field(const json& j, const std::string& path) {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    const auto parsed = Rational::parse(j.dump());
    if (!parsed) fail(path, "integer out of parseable form");
    return *parsed;
  }
  if (j.is_number_float()) fail(path, "decimal numbers are rejected; write \"p/q\" instead");
  if (j.is_string()) {
    const auto parsed = Rational::parse(j.get<std::string>());
    if (!parsed) fail(path, "not a rational \"p\" or \"p/q\"");
    return *parsed;
  }
  fail(path, "expected an integer or a rational string");
}

RationalMatrix parse_matrix_field(const json& j, int rows, int cols, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (static_cast<int>(j.size()) != rows) {
    fail(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  }
  int found_cols = cols;
  if (found_cols < 0) {
    if (j.empty() || !j[0].is_array()) fail(path + "[0]", "expected an array row");
    found_cols = static_cast<int>(j[0].size());
    if (found_cols < 1) fail(path + "[0]", "rows must have at least one entry");
  }
  RationalMatrix m(rows, found_cols);
  for (int i = 0; i < rows; ++i) {
    const std::string row_path = path + "[" + std::to_string(i + 1) + "]";
    if (!j[i].is_array()) fail(row_path, "expected an array row");
    if (static_cast<int>(j[i].size()) != found_cols) {
      fail(row_path, "expected " + std::to_string(found_cols) + " entries, found " +
                         std::to_string(j[i].size()));
    }
    for (int c = 0; c < found_cols; ++c) {
      m(i, c) = parse_rational_field(j[i][c], row_path + "[" + std::to_string(c + 1) + "]");
    }
  }
  return m;
}

}  // namespace

SystemPair parse_model(const std::string& text) { return parse_model_file(text).pair; }

ParsedModel parse_model_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInputError(std::string("model: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("$", "top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "n" && key != "A" && key != "B" && key != "metadata") {
      fail(key, "unknown field");
    }
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) fail("n", "required positive integer");
  const long long n_raw = doc["n"].get<long long>();
  if (n_raw < 1 || n_raw > 1000) fail("n", "must lie in [1, 1000]");
  const int n = static_cast<int>(n_raw);

  std::string name;
  if (doc.contains("metadata")) {
    const json& metadata = doc["metadata"];
    if (!metadata.is_object()) fail("metadata", "expected an object");
    for (const auto& [key, value] : metadata.items()) {
      if (key != "name" && key != "description") fail("metadata." + key, "unknown field");
      if (!value.is_string()) fail("metadata." + key, "expected a string");
    }
    if (metadata.contains("name")) name = metadata["name"].get<std::string>();
  }

  if (!doc.contains("A")) fail("A", "required n x n array");
  const RationalMatrix a = parse_matrix_field(doc["A"], n, n, "A");

  if (!doc.contains("B") || !doc["B"].is_object()) {
    fail("B", "required object with \"leaders\" or \"matrix\"");
  }
  const json& b = doc["B"];
  const bool has_leaders = b.contains("leaders");
  const bool has_matrix = b.contains("matrix");
  if (has_leaders == has_matrix) fail("B", "exactly one of \"leaders\" or \"matrix\" required");
  for (const auto& [key, value] : b.items()) {
    (void)value;
    if (key != "leaders" && key != "matrix") fail("B." + key, "unknown field");
  }

  if (has_leaders) {
    const json& leaders_json = b["leaders"];
    if (!leaders_json.is_array() || leaders_json.empty()) {
      fail("B.leaders", "expected a nonempty array of 1-based indices");
    }
    std::vector<int> leaders;
    long long previous = 0;
    for (size_t i = 0; i < leaders_json.size(); ++i) {
      const std::string path = "B.leaders[" + std::to_string(i + 1) + "]";
      if (!leaders_json[i].is_number_integer()) fail(path, "expected an integer");
      const long long v = leaders_json[i].get<long long>();
      if (v < 1 || v > n) fail(path, "index out of range [1, n]");
      if (v <= previous) fail(path, "indices must be strictly increasing");
      previous = v;
      leaders.push_back(static_cast<int>(v) - 1);
    }
    return ParsedModel{SystemPair::from_leaders(a, leaders), std::move(name)};
  }

  const RationalMatrix bm = parse_matrix_field(b["matrix"], n, -1, "B.matrix");
  return ParsedModel{SystemPair(a, bm), std::move(name)};
}

RationalVector parse_rational_vector(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInputError(std::string("vector: invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InvalidInputError("vector: expected a JSON array of rationals");
  RationalVector out;
  out.reserve(doc.size());
  for (size_t i = 0; i < doc.size(); ++i) {
    out.push_back(parse_rational_field(doc[i], "vector[" + std::to_string(i + 1) + "]"));
  }
  return out;
}

std::string model_to_json(const SystemPair& pair, const std::string& name) {
  json doc;
  doc["n"] = pair.state_dim();
  json rows = json::array();
  for (int i = 0; i < pair.state_dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < pair.state_dim(); ++j) {
      const Rational& x = pair.A(i, j);
      if (x.is_integer() && x.numerator().fits_slong_p()) {
        row.push_back(x.numerator().get_si());
      } else {
        row.push_back(x.str());
      }
    }
    rows.push_back(std::move(row));
  }
  doc["A"] = std::move(rows);
  if (pair.has_selection_input()) {
    json leaders = json::array();
    for (int v : *pair.leader_indices) leaders.push_back(v + 1);
    doc["B"] = json{{"leaders", std::move(leaders)}};
  } else {
    json brows = json::array();
    for (int i = 0; i < pair.B.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < pair.B.cols(); ++j) {
        const Rational& x = pair.B(i, j);
        if (x.is_integer() && x.numerator().fits_slong_p()) {
          row.push_back(x.numerator().get_si());
        } else {
          row.push_back(x.str());
        }
      }
      brows.push_back(std::move(row));
    }
    doc["B"] = json{{"matrix", std::move(brows)}};
  }
  if (!name.empty()) doc["metadata"] = json{{"name", name}};
  return doc.dump(2) + "\n";
}

}  // namespace herd
