#pragma once

#include "rptgeo/frame_algebra.hpp"
#include "rptgeo/tensor.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace rptgeo {

/// Malformed table file or a table whose symmetry expansion contradicts itself.
class GoldenError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A symmetry t(x_{perm[0]}, ..., x_{perm[r-1]}) = sign * t(x_0, ..., x_{r-1}).
struct SymmetryRule {
  std::vector<std::size_t> permutation;
  int sign;
};

/// A table of expected components. Only listed tuples are stored; expand()
/// fills in the rest from the declared symmetries, with zero elsewhere.
///
/// File format:
///   {"table": "T", "rank": 3, "parameters": ["l1", ...],
///    "symmetries": [{"permutation": [2, 1, 3], "sign": -1}, ...],
///    "entries": [{"indices": [[1, 3, 4]], "negated": [], "value": "-l1"}, ...]}
/// Permutations and indices are 1-based. Every tuple under "indices" has the
/// entry's value and every tuple under "negated" its negative.
struct GoldenTable {
  struct Entry {
    std::vector<Index> indices;  // 0-based
    std::vector<Index> negated;  // 0-based
    Scalar value;
  };

  std::string name;
  std::size_t rank = 0;
  std::vector<SymmetryRule> symmetries;
  std::vector<Entry> entries;

  /// Number of tuples listed explicitly in the file.
  std::size_t listed_count() const;

  /// The full tensor over a dim-dimensional frame, all slots covariant
  /// except the last one when last_contravariant is set. Throws GoldenError
  /// when two orbit members receive different values.
  Tensor expand(std::size_t dim, bool last_contravariant = false) const;
};

GoldenTable parse_golden(const nlohmann::json& doc, const ParamNames& params);
GoldenTable load_golden(const std::filesystem::path& path, const ParamNames& params);

/// Compares computed against expected; every differing component becomes a
/// witness with its 1-based index.
CheckReport compare_tables(const std::string& name, const Tensor& expected, const Tensor& computed);

}  // namespace rptgeo
