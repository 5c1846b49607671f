#include "rptgeo/report.hpp"

#include "rptgeo/example_g.hpp"
#include "rptgeo/expression.hpp"
#include "rptgeo/golden.hpp"
#include "rptgeo/levi_civita.hpp"
#include "rptgeo/rpt_connection.hpp"
#include "rptgeo/spec_io.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace rptgeo {

using nlohmann::json;

namespace {

const ParamNames kExampleParams{"l1", "l2", "l3", "l4"};

std::string show_index(const Index& idx) {
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + ")";
}

ReportTable table_of(std::string name, const Tensor& t) {
  ReportTable table{std::move(name), {}, {}};
  for (std::size_t flat = 0; flat < t.components().size(); ++flat) {
    const Scalar& v = t.components()[flat];
    if (v.is_zero()) continue;
    Index idx = t.unflatten(flat);
    for (auto& i : idx) ++i;
    table.entries.emplace_back(std::move(idx), v);
  }
  return table;
}

TheoremResult structure_row(const CheckReport& c) {
  TheoremResult r;
  r.id = "structure";
  r.suite = "geometry";
  r.title = "frame algebra axioms";
  r.conclusion_holds = c.passed;
  r.witnesses = c.witnesses;
  r.details = c.notes;
  return r;
}

TheoremResult killing_row(const CheckReport& c) {
  TheoremResult r;
  r.id = "killing-metric";
  r.suite = "geometry";
  r.title = "g([x,y],Pz) + g([x,z],Py) = 0";
  r.advisory = true;
  r.conclusion_holds = c.passed;
  r.witnesses = c.witnesses;
  return r;
}

/// Loads a spec and applies --lambda; on failure fills report.error.
std::optional<FrameAlgebra> load_input(Report& report, const std::filesystem::path& path,
                                       const std::optional<std::vector<Rational>>& lambda) {
  report.input = path.string();
  try {
    FrameAlgebra fa = load_spec(path);
    if (lambda) {
      if (lambda->size() != fa.params().size())
        throw SpecError("--lambda: expected " + std::to_string(fa.params().size()) + " values for the parameters, got " +
                        std::to_string(lambda->size()));
      std::vector<Scalar> values(lambda->begin(), lambda->end());
      fa = FrameAlgebra({}, fa.structure().substitute(values), fa.metric().substitute(values),
                        fa.product().substitute(values));
    }
    report.params = fa.params();
    report.input_digest = input_digest(fa);
    return fa;
  } catch (const SpecError& e) {
    report.error = e.what();
  } catch (const StructureError& e) {
    report.error = e.what();
  }
  return std::nullopt;
}

json witness_json(const Witness& w, const ParamNames& params) {
  json j{{"what", w.what}, {"index", w.index}, {"actual", to_string(w.actual, params)}};
  j["expected"] = w.expected ? json(to_string(*w.expected, params)) : json(nullptr);
  return j;
}

std::string witness_text(const Witness& w, const ParamNames& params) {
  std::string s = w.what;
  if (!w.index.empty()) s += " at " + show_index(w.index);
  if (w.expected) s += ": expected " + to_string(*w.expected, params) + ", got " + to_string(w.actual, params);
  else s += ": value " + to_string(w.actual, params);
  return s;
}

}  // namespace

int Report::exit_status() const {
  if (error) return kExitUsage;
  for (const TheoremResult& r : checks)
    if (!r.advisory && r.status() == Status::Fail) return kExitFail;
  return kExitPass;
}

std::string input_digest(const FrameAlgebra& fa) {
  const std::string canonical = spec_to_json(fa).dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 digest failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

std::vector<Rational> parse_lambda_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    Scalar v;
    try {
      v = parse_expression(item, {});
    } catch (const ParseError& e) {
      throw std::invalid_argument("lambda entry '" + item + "': " + e.what());
    }
    const auto c = v.constant_value();
    if (!c) throw std::invalid_argument("lambda entry '" + item + "' is not a constant");
    out.push_back(*c);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Report cmd_validate(const std::filesystem::path& path) {
  Report report;
  report.command = "validate";
  auto fa = load_input(report, path, std::nullopt);
  if (!fa) return report;
  report.checks.push_back(structure_row(validate(*fa)));
  report.checks.push_back(killing_row(killing_check(*fa)));
  return report;
}

Report cmd_report(const std::filesystem::path& path, const RunOptions& options) {
  Report report;
  report.command = "report";
  auto fa = load_input(report, path, options.lambda);
  if (!fa) return report;
  report.checks.push_back(structure_row(validate(*fa)));
  if (report.checks.back().status() == Status::Fail) return report;

  const Connection lc = levi_civita(*fa);
  const Tensor f = fundamental_F(*fa, lc);
  report.class_label = classify(*fa);
  report.scalars.emplace_back("tau", curvature(*fa, lc).scalar);
  report.scalars.emplace_back("norm_nabla_P", square_norm_nabla_P(*fa, lc));
  report.tables.push_back(table_of("F", f));
  report.tables.push_back(table_of("nabla", lc.coefficients));

  TheoremResult rpt_row;
  rpt_row.id = "rpt-connection";
  rpt_row.suite = "rpt";
  rpt_row.title = "RPT-connection and its torsion";
  try {
    const ConnectionPack pack = rpt_connection(*fa);
    report.scalars.emplace_back("tau'", curvature(*fa, pack.rpt).scalar);
    const TorsionProjections p = torsion_projections(pack.T, *fa);
    const Matrix& g_inv = fa->inverse_metric();
    report.scalars.emplace_back("norm_p1", inner_product(p.p1, p.p1, g_inv));
    report.scalars.emplace_back("norm_p2", inner_product(p.p2, p.p2, g_inv));
    report.scalars.emplace_back("norm_p3", inner_product(p.p3, p.p3, g_inv));
    report.scalars.emplace_back("norm_p4", inner_product(p.p4, p.p4, g_inv));
    report.tables.push_back(table_of("T", pack.T));
    report.tables.push_back(table_of("nabla'", pack.rpt.coefficients));
    rpt_row.details.push_back("constructed");
  } catch (const NotW3& e) {
    rpt_row.hypotheses_satisfied = false;
    rpt_row.conclusion_holds = false;
    rpt_row.reason = std::string("NotW3: ") + e.what();
    for (const char* name : {"T", "nabla'"}) report.tables.push_back({name, rpt_row.reason, {}});
  }
  report.checks.push_back(std::move(rpt_row));
  return report;
}

Report cmd_check(const std::filesystem::path& path, const RunOptions& options) {
  Report report;
  report.command = "check";
  auto fa = load_input(report, path, options.lambda);
  if (!fa) return report;
  const CheckReport structure = validate(*fa);
  if (!structure.passed) {
    report.checks.push_back(structure_row(structure));
    return report;
  }
  report.class_label = classify(*fa);
  report.checks = run_all(*fa, options.suite);
  return report;
}

std::vector<TheoremResult> compare_golden_tables(const FrameAlgebra& fa,
                                                 const std::optional<std::array<Rational, 4>>& lambda,
                                                 const std::filesystem::path& golden_dir) {
  const ConnectionPack pack = rpt_connection(fa);
  const Tensor r_prime = curvature(fa, pack.rpt).riemann;
  const Tensor nt = covariant_derivative(fa, pack.rpt, pack.T);
  struct Item {
    const char* id;
    const char* file;
    const Tensor* computed;
    bool last_contravariant;
  };
  const Item items[] = {{"golden-torsion", "torsion.json", &pack.T, false},
                        {"golden-rpt-connection", "rpt_connection.json", &pack.rpt.coefficients, true},
                        {"golden-curvature-rpt", "curvature_rpt.json", &r_prime, false},
                        {"golden-nabla-torsion", "nabla_torsion.json", &nt, false}};

  std::vector<TheoremResult> out;
  for (const Item& item : items) {
    TheoremResult r;
    r.id = item.id;
    r.suite = "example";
    r.title = std::string("computed components against ") + item.file;
    try {
      const GoldenTable table = load_golden(golden_dir / item.file, kExampleParams);
      Tensor expected = table.expand(4, item.last_contravariant);
      if (lambda) expected = expected.substitute({Scalar((*lambda)[0]), Scalar((*lambda)[1]),
                                                  Scalar((*lambda)[2]), Scalar((*lambda)[3])});
      const CheckReport cmp = compare_tables(table.name, expected, *item.computed);
      r.conclusion_holds = cmp.passed;
      r.witnesses = cmp.witnesses;
      r.details.push_back(std::to_string(table.listed_count()) + " listed entries");
    } catch (const GoldenError& e) {
      r.conclusion_holds = false;
      r.witnesses.push_back({e.what(), {}, std::nullopt, Scalar(0)});
    }
    out.push_back(std::move(r));
  }
  return out;
}

Report cmd_example(const std::optional<std::array<Rational, 4>>& lambda, const std::filesystem::path& golden_dir) {
  Report report;
  report.command = "example";
  const ExampleSpec spec = lambda ? ExampleSpec::numeric(*lambda) : ExampleSpec::symbolic();
  const FrameAlgebra fa = build_example(spec);
  if (lambda) {
    std::string s;
    for (std::size_t i = 0; i < 4; ++i) s += (i ? "," : "") + (*lambda)[i].get_str();
    report.input = "example lambda=" + s;
  } else {
    report.input = "example symbolic";
  }
  report.params = fa.params();
  report.input_digest = input_digest(fa);
  report.class_label = classify(fa);

  const ConnectionPack pack = rpt_connection(fa);
  const Connection& lc = pack.nabla;
  report.scalars.emplace_back("tau", curvature(fa, lc).scalar);
  report.scalars.emplace_back("tau'", curvature(fa, pack.rpt).scalar);
  report.scalars.emplace_back("norm_nabla_P", square_norm_nabla_P(fa, lc));

  report.checks = compare_golden_tables(fa, lambda, golden_dir);
  for (TheoremResult& r : run_all(fa, Suite::All)) report.checks.push_back(std::move(r));
  return report;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  const ParamNames& params = report.params;
  out << "rptgeo " << report.command << ": " << report.input << "\n";
  if (report.error) {
    out << "error: " << *report.error << "\n";
    return out.str();
  }
  out << "input digest: " << report.input_digest << "\n";
  if (report.class_label)
    out << "class: " << to_string(report.class_label->kind) << " (F = 0: " << (report.class_label->f_zero ? "true" : "false")
        << ", cyclic sum of F = 0: " << (report.class_label->cyclic_sum_zero ? "true" : "false") << ")\n";

  if (!report.scalars.empty()) {
    out << "\nscalars\n";
    for (const auto& [name, value] : report.scalars) out << "  " << name << " = " << to_string(value, params) << "\n";
  }
  for (const ReportTable& t : report.tables) {
    out << "\n" << t.name;
    if (!t.skipped.empty()) {
      out << ": skipped (" << t.skipped << ")\n";
      continue;
    }
    out << " (" << t.entries.size() << " nonzero components)\n";
    for (const auto& [idx, v] : t.entries) out << "  " << t.name << show_index(idx) << " = " << to_string(v, params) << "\n";
  }

  out << "\nchecks\n";
  std::size_t counts[3] = {0, 0, 0};
  for (const TheoremResult& r : report.checks) {
    const Status s = r.status();
    ++counts[static_cast<int>(s)];
    out << "  [" << to_string(s) << "] " << r.id << (r.advisory ? " (advisory)" : "") << ": " << r.title << "\n";
    for (const std::string& d : r.details) out << "      " << d << "\n";
    if (!r.reason.empty()) out << "      reason: " << r.reason << "\n";
    for (const Witness& w : r.witnesses) out << "      witness: " << witness_text(w, params) << "\n";
  }
  out << "\nsummary: " << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped\n";
  return out.str();
}

json render_json(const Report& report) {
  const ParamNames& params = report.params;
  json j{{"schema", kReportSchema}, {"command", report.command}, {"input", report.input}};
  if (report.error) {
    j["error"] = *report.error;
    j["exit_status"] = report.exit_status();
    return j;
  }
  j["input_digest"] = report.input_digest;
  j["parameters"] = params;
  if (report.class_label) {
    j["class"] = to_string(report.class_label->kind);
    j["class_flags"] = {{"f_zero", report.class_label->f_zero},
                        {"cyclic_sum_zero", report.class_label->cyclic_sum_zero}};
  } else {
    j["class"] = nullptr;
  }
  json scalars = json::object();
  for (const auto& [name, value] : report.scalars) scalars[name] = to_string(value, params);
  j["scalars"] = std::move(scalars);

  json tables = json::array();
  for (const ReportTable& t : report.tables) {
    json entries = json::array();
    for (const auto& [idx, v] : t.entries) entries.push_back({{"index", idx}, {"value", to_string(v, params)}});
    json tj{{"name", t.name}, {"entries", std::move(entries)}};
    if (!t.skipped.empty()) tj["skipped"] = t.skipped;
    tables.push_back(std::move(tj));
  }
  j["tables"] = std::move(tables);

  json checks = json::array();
  for (const TheoremResult& r : report.checks) {
    json witnesses = json::array(), evidence = json::array();
    for (const Witness& w : r.witnesses) witnesses.push_back(witness_json(w, params));
    for (const Witness& w : r.evidence) evidence.push_back(witness_json(w, params));
    json c{{"id", r.id},
           {"suite", r.suite},
           {"title", r.title},
           {"status", to_string(r.status())},
           {"advisory", r.advisory},
           {"hypotheses_satisfied", r.hypotheses_satisfied},
           {"conclusion_holds", r.conclusion_holds},
           {"details", r.details},
           {"witnesses", std::move(witnesses)},
           {"evidence", std::move(evidence)}};
    c["reason"] = r.reason.empty() ? json(nullptr) : json(r.reason);
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["exit_status"] = report.exit_status();
  return j;
}

}  // namespace rptgeo
