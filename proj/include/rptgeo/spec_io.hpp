#pragma once

#include "rptgeo/frame_algebra.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace rptgeo {

/// Unreadable file or a schema violation; the message starts with the
/// offending field path, e.g. "metric[2]: expected 4 entries, got 3".
class SpecError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Frame-algebra spec format:
///
///   {"dimension": 4, "parameters": ["l1", ...],
///    "brackets": [{"left": 1, "right": 2, "result": {"1": "l1", "2": "l2"}}, ...],
///    "metric": [["1", "0", ...], ...], "product": [["0", "0", "1", "0"], ...]}
///
/// Indices are 1-based, brackets are listed with left < right, omitted
/// result components are zero, and every entry is an expression string.
FrameAlgebra parse_spec(const nlohmann::json& doc);
nlohmann::json spec_to_json(const FrameAlgebra& fa);

FrameAlgebra load_spec(const std::filesystem::path& path);
void save_spec(const FrameAlgebra& fa, const std::filesystem::path& path);

/// Reads and parses a JSON file, raising SpecError on I/O or syntax failure.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace rptgeo
