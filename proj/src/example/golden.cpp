#include "rptgeo/golden.hpp"

#include "rptgeo/expression.hpp"
#include "rptgeo/spec_io.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rptgeo {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& table, const std::string& msg) {
  throw GoldenError(table + ": " + msg);
}

std::string show(const Index& idx) {
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k] + 1);
  return s + ")";
}

Index parse_tuple(const json& v, std::size_t rank, const std::string& table) {
  if (!v.is_array() || v.size() != rank) fail(table, "index tuples must have " + std::to_string(rank) + " entries");
  Index idx;
  for (const json& i : v) {
    if (!i.is_number_integer() || i.get<long long>() < 1) fail(table, "indices are positive integers");
    idx.push_back(static_cast<std::size_t>(i.get<long long>() - 1));
  }
  return idx;
}

std::vector<Index> parse_tuples(const json& entry, const char* key, std::size_t rank, const std::string& table) {
  std::vector<Index> out;
  auto it = entry.find(key);
  if (it == entry.end()) return out;
  if (!it->is_array()) fail(table, std::string(key) + " must be a list of index tuples");
  for (const json& t : *it) out.push_back(parse_tuple(t, rank, table));
  return out;
}

Index permuted(const SymmetryRule& rule, const Index& idx) {
  Index out(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) out[k] = idx[rule.permutation[k]];
  return out;
}

}  // namespace

std::size_t GoldenTable::listed_count() const {
  return std::accumulate(entries.begin(), entries.end(), std::size_t{0},
                         [](std::size_t n, const Entry& e) { return n + e.indices.size() + e.negated.size(); });
}

Tensor GoldenTable::expand(std::size_t dim, bool last_contravariant) const {
  std::vector<Variance> variance(rank, Variance::Co);
  if (last_contravariant && rank > 0) variance.back() = Variance::Contra;
  Tensor out(dim, variance);
  std::map<Index, Scalar> assigned;

  auto seed = [&](const Index& start, const Scalar& value) {
    for (std::size_t i : start)
      if (i >= dim) fail(name, "index " + show(start) + " exceeds dimension " + std::to_string(dim));
    std::vector<std::pair<Index, Scalar>> stack{{start, value}};
    while (!stack.empty()) {
      auto [idx, v] = std::move(stack.back());
      stack.pop_back();
      auto [it, inserted] = assigned.try_emplace(idx, v);
      if (!inserted) {
        if (!(it->second == v))
          fail(name, "symmetry expansion assigns both " + to_string(it->second) + " and " + to_string(v) +
                         " to " + show(idx));
        continue;
      }
      for (const SymmetryRule& rule : symmetries) stack.emplace_back(permuted(rule, idx), rule.sign < 0 ? -v : v);
    }
  };

  for (const Entry& e : entries) {
    for (const Index& idx : e.indices) seed(idx, e.value);
    for (const Index& idx : e.negated) seed(idx, -e.value);
  }
  for (const auto& [idx, v] : assigned) out.at(idx) = v;
  return out;
}

GoldenTable parse_golden(const json& doc, const ParamNames& params) {
  GoldenTable t;
  if (!doc.is_object()) throw GoldenError("golden table: expected a JSON object");
  t.name = doc.value("table", std::string("?"));
  if (!doc.contains("rank") || !doc["rank"].is_number_integer() || doc["rank"].get<long long>() < 1)
    fail(t.name, "rank must be a positive integer");
  t.rank = static_cast<std::size_t>(doc["rank"].get<long long>());

  ParamNames file_params = doc.value("parameters", ParamNames{});
  for (const json& s : doc.value("symmetries", json::array())) {
    SymmetryRule rule;
    const Index perm = parse_tuple(s.at("permutation"), t.rank, t.name);
    Index sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
      if (sorted[k] != k) fail(t.name, "symmetry " + show(perm) + " is not a permutation");
    rule.permutation = perm;
    rule.sign = s.value("sign", 1);
    if (rule.sign != 1 && rule.sign != -1) fail(t.name, "symmetry sign must be 1 or -1");
    t.symmetries.push_back(std::move(rule));
  }

  if (!doc.contains("entries") || !doc["entries"].is_array()) fail(t.name, "entries must be a list");
  for (std::size_t n = 0; n < doc["entries"].size(); ++n) {
    const json& e = doc["entries"][n];
    GoldenTable::Entry entry;
    entry.indices = parse_tuples(e, "indices", t.rank, t.name);
    entry.negated = parse_tuples(e, "negated", t.rank, t.name);
    if (!e.contains("value") || !e["value"].is_string()) fail(t.name, "entries[" + std::to_string(n) + "]: value must be a string");
    try {
      // Values are written in the file's parameter names, then mapped onto params.
      const Scalar local = parse_expression(e["value"].get<std::string>(), file_params);
      std::vector<Scalar> mapping;
      for (const std::string& name : file_params) {
        auto it = std::find(params.begin(), params.end(), name);
        if (it == params.end()) fail(t.name, "parameter '" + name + "' is not declared by the frame");
        mapping.push_back(Scalar::variable(static_cast<std::size_t>(it - params.begin())));
      }
      entry.value = local.substitute(mapping);
    } catch (const ParseError& err) {
      fail(t.name, "entries[" + std::to_string(n) + "]: " + err.what());
    }
    t.entries.push_back(std::move(entry));
  }
  return t;
}

GoldenTable load_golden(const std::filesystem::path& path, const ParamNames& params) {
  try {
    return parse_golden(read_json_file(path), params);
  } catch (const SpecError& e) {
    throw GoldenError(e.what());
  }
}

CheckReport compare_tables(const std::string& name, const Tensor& expected, const Tensor& computed) {
  CheckReport r(name);
  if (expected.dim() != computed.dim() || expected.rank() != computed.rank()) {
    r.fail({name + ": shape mismatch", {}, std::nullopt, Scalar(0)});
    return r;
  }
  for (std::size_t flat = 0; flat < expected.components().size(); ++flat) {
    if (expected.components()[flat] == computed.components()[flat]) continue;
    Index idx = expected.unflatten(flat);
    for (auto& i : idx) ++i;
    r.fail({name, idx, expected.components()[flat], computed.components()[flat]});
  }
  return r;
}

}  // namespace rptgeo
