#include "rptgeo/spec_io.hpp"

#include "rptgeo/expression.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace rptgeo {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw SpecError(path + ": " + msg);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path.empty() ? key : path + "." + key, "missing field");
  return *it;
}

Scalar parse_entry(const json& v, const ParamNames& params, const std::string& path) {
  if (!v.is_string()) schema_error(path, "expected an expression string");
  try {
    return parse_expression(v.get<std::string>(), params);
  } catch (const ParseError& e) {
    schema_error(path, e.what());
  }
}

std::size_t parse_index(const json& v, std::size_t dim, const std::string& path) {
  if (!v.is_number_integer()) schema_error(path, "expected an integer index");
  const auto i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > dim)
    schema_error(path, "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(i - 1);
}

Matrix parse_matrix(const json& m, std::size_t dim, const ParamNames& params, const std::string& name) {
  if (!m.is_array()) schema_error(name, "expected an array of rows");
  if (m.size() != dim)
    schema_error(name, "expected " + std::to_string(dim) + " rows, got " + std::to_string(m.size()));
  Matrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::string row = name + "[" + std::to_string(i) + "]";
    if (!m[i].is_array()) schema_error(row, "expected an array");
    if (m[i].size() != dim)
      schema_error(row, "expected " + std::to_string(dim) + " entries, got " + std::to_string(m[i].size()));
    for (std::size_t j = 0; j < dim; ++j)
      out(i, j) = parse_entry(m[i][j], params, row + "[" + std::to_string(j) + "]");
  }
  return out;
}

std::string print_entry(const Scalar& s, const ParamNames& params, const std::string& path) {
  if (!s.is_polynomial())
    throw SpecError(path + ": rational functions with non-constant denominator cannot be serialized");
  return to_string(s, params);
}

json matrix_to_json(const Matrix& m, const ParamNames& params, const std::string& name) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j)
      row.push_back(print_entry(m(i, j), params, name + "[" + std::to_string(i) + "]"));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

FrameAlgebra parse_spec(const json& doc) {
  if (!doc.is_object()) schema_error("$", "expected a JSON object");
  const json& dim_v = require(doc, "dimension", "");
  if (!dim_v.is_number_integer() || dim_v.get<long long>() <= 0)
    schema_error("dimension", "expected a positive integer");
  const auto dim = static_cast<std::size_t>(dim_v.get<long long>());
  if (dim % 2 != 0) schema_error("dimension", "must be even");

  ParamNames params;
  if (auto it = doc.find("parameters"); it != doc.end()) {
    if (!it->is_array()) schema_error("parameters", "expected an array of names");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& p = (*it)[i];
      const std::string path = "parameters[" + std::to_string(i) + "]";
      if (!p.is_string() || p.get<std::string>().empty()) schema_error(path, "expected a name");
      const auto name = p.get<std::string>();
      const bool ident = !std::isdigit(static_cast<unsigned char>(name[0])) &&
                         std::all_of(name.begin(), name.end(), [](char ch) {
                           return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
                         });
      if (!ident) schema_error(path, "invalid parameter name '" + name + "'");
      if (std::find(params.begin(), params.end(), name) != params.end())
        schema_error(path, "duplicate parameter '" + name + "'");
      params.push_back(name);
    }
  }

  Tensor c = zero_structure(dim);
  const json& brackets = require(doc, "brackets", "");
  if (!brackets.is_array()) schema_error("brackets", "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string path = "brackets[" + std::to_string(b) + "]";
    const json& entry = brackets[b];
    const std::size_t left = parse_index(require(entry, "left", path), dim, path + ".left");
    const std::size_t right = parse_index(require(entry, "right", path), dim, path + ".right");
    if (left >= right) schema_error(path, "brackets must be listed with left < right");
    if (!seen.insert({left, right}).second) schema_error(path, "duplicate bracket");
    const json& result = require(entry, "result", path);
    if (!result.is_object()) schema_error(path + ".result", "expected an object");
    for (const auto& [key, value] : result.items()) {
      const std::string rpath = path + ".result." + key;
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        const long long v = std::stoll(key, &used);
        if (used != key.size() || v < 1 || static_cast<std::size_t>(v) > dim) throw std::out_of_range(key);
        k = static_cast<std::size_t>(v - 1);
      } catch (const std::exception&) {
        schema_error(rpath, "result key must be an index in 1.." + std::to_string(dim));
      }
      const Scalar s = parse_entry(value, params, rpath);
      c(left, right, k) = s;
      c(right, left, k) = -s;
    }
  }

  Matrix g = parse_matrix(require(doc, "metric", ""), dim, params, "metric");
  Matrix p = parse_matrix(require(doc, "product", ""), dim, params, "product");
  return FrameAlgebra(std::move(params), std::move(c), std::move(g), std::move(p));
}

json spec_to_json(const FrameAlgebra& fa) {
  const std::size_t n = fa.dim();
  json brackets = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      json result = json::object();
      for (std::size_t k = 0; k < n; ++k)
        if (!fa.c(i, j, k).is_zero())
          result[std::to_string(k + 1)] = print_entry(fa.c(i, j, k), fa.params(), "brackets");
      if (result.empty()) continue;
      brackets.push_back({{"left", i + 1}, {"right", j + 1}, {"result", std::move(result)}});
    }
  return json{{"dimension", n},
              {"parameters", fa.params()},
              {"brackets", std::move(brackets)},
              {"metric", matrix_to_json(fa.metric(), fa.params(), "metric")},
              {"product", matrix_to_json(fa.product(), fa.params(), "product")}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path.string() + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw SpecError(path.string() + ": invalid JSON: " + e.what());
  }
}

FrameAlgebra load_spec(const std::filesystem::path& path) { return parse_spec(read_json_file(path)); }

void save_spec(const FrameAlgebra& fa, const std::filesystem::path& path) {
  const json doc = spec_to_json(fa);
  std::ofstream out(path);
  if (!out) throw SpecError(path.string() + ": cannot write file");
  out << doc.dump(2) << '\n';
  if (!out) throw SpecError(path.string() + ": write failed");
}

}  // namespace rptgeo
