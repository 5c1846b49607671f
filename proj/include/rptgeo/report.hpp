#pragma once

#include "rptgeo/frame_algebra.hpp"
#include "rptgeo/levi_civita.hpp"
#include "rptgeo/theorems.hpp"

#include <json.hpp>

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rptgeo {

inline constexpr int kReportSchema = 1;

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Nonzero components of one tensor, for display.
struct ReportTable {
  std::string name;
  std::string skipped;  // reason when the table could not be computed
  std::vector<std::pair<Index, Scalar>> entries;  // 1-based indices
};

/// Outcome of one CLI run. Built by the cmd_* functions and rendered as text
/// or as JSON; both renderings print Scalars through the same canonical form.
struct Report {
  std::string command;
  std::string input;
  std::string input_digest;  // sha256 of the canonical spec JSON, hex
  ParamNames params;
  std::optional<ClassLabel> class_label;
  std::vector<std::pair<std::string, Scalar>> scalars;
  std::vector<ReportTable> tables;
  std::vector<TheoremResult> checks;
  /// Set when the run stopped before any check (unreadable or malformed input).
  std::optional<std::string> error;

  /// 0 iff every non-advisory, non-skipped check passed; 2 on input errors.
  int exit_status() const;
};

/// Hex sha256 of the canonical serialization of fa.
std::string input_digest(const FrameAlgebra& fa);

/// Parses "a,b,c,d" (any count) into rational constants; throws
/// std::invalid_argument on malformed lists.
std::vector<Rational> parse_lambda_list(const std::string& text);

struct RunOptions {
  Suite suite = Suite::All;
  std::optional<std::vector<Rational>> lambda;  // substituted into the spec's parameters
};

Report cmd_validate(const std::filesystem::path& path);
Report cmd_report(const std::filesystem::path& path, const RunOptions& options);
Report cmd_check(const std::filesystem::path& path, const RunOptions& options);
/// Builds the example (symbolic when lambda is empty), compares the golden
/// tables from golden_dir and runs every check.
Report cmd_example(const std::optional<std::array<Rational, 4>>& lambda, const std::filesystem::path& golden_dir);

/// Golden-table comparison for one example frame; lambda = nullopt means symbolic.
std::vector<TheoremResult> compare_golden_tables(const FrameAlgebra& fa,
                                                 const std::optional<std::array<Rational, 4>>& lambda,
                                                 const std::filesystem::path& golden_dir);

std::string render_text(const Report& report);
nlohmann::json render_json(const Report& report);

}  // namespace rptgeo
