#include "zetaforge/batch.hpp"

#include <fstream>
#include <sstream>

#include "reports.hpp"
#include "zetaforge/dsl.hpp"

namespace zetaforge {

namespace {

using nlohmann::json;

void add(json& checks, bool& pass, const VerificationReport& r) {
  checks.push_back(r.to_json());
  pass = pass && r.pass;
}

json summarize(std::vector<json> entries) {
  json out;
  std::size_t passed = 0, errors = 0;
  for (const auto& e : entries) {
    if (e["verdict"] == "pass") ++passed;
    if (e["verdict"] == "error") ++errors;
  }
  out["summary"] = {{"entries", entries.size()},
                    {"passed", passed},
                    {"failed", entries.size() - passed - errors},
                    {"errors", errors}};
  out["verdict"] = passed == entries.size() ? "pass" : "fail";
  out["entries"] = std::move(entries);
  return out;
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(std::istream& in) {
  std::vector<ManifestEntry> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    std::istringstream fields(text.substr(first));
    ManifestEntry entry;
    entry.line = line;
    if (!(fields >> entry.n)) {
      throw Error(ErrorCode::SyntaxError, "manifest line " + std::to_string(line) + ": expected '<n> <expr>'");
    }
    std::getline(fields, entry.expr);
    const auto start = entry.expr.find_first_not_of(" \t");
    if (start == std::string::npos) {
      throw Error(ErrorCode::SyntaxError, "manifest line " + std::to_string(line) + ": missing expression");
    }
    entry.expr = entry.expr.substr(start);
    while (!entry.expr.empty() && (entry.expr.back() == '\r' || entry.expr.back() == ' ')) entry.expr.pop_back();
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open manifest " + path);
  return parse_manifest(in);
}

json run_entry(const ManifestEntry& entry, const BatchOptions& options) {
  json out;
  out["line"] = entry.line;
  out["n"] = entry.n;
  out["source"] = entry.expr;
  json checks = json::array();
  bool pass = true;
  try {
    if (entry.n >= 0) throw Error(ErrorCode::InvalidArgument, "n must be negative");
    json diagnostics;
    const SchemeExpr e = reports::parse_checked(entry.expr, diagnostics);
    out["expr"] = print_expr(e);
    for (const auto& r : reports::vanishing_order_reports(e, entry.n)) add(checks, pass, r);
    if (is_finite_characteristic(e)) {
      add(checks, pass, verify_C_finite_char(e, entry.n));
      add(checks, pass, p_part_check(e, entry.n));
      if (bases(e).size() == 1) add(checks, pass, trace_formula_check(e, options.series_order));
      if (weil_order_data(e, entry.n).graded) {
        for (const auto& r : reports::ell_reports(e, entry.n, options.ell_bound)) add(checks, pass, r);
      }
    } else {
      out["value"] = reports::special_value_json(evaluate_at(zeta_of(e), entry.n, options.precision), options.precision);
    }
  } catch (const Error& err) {
    out["error"] = reports::error_json(err);
    pass = false;
  } catch (const std::exception& ex) {
    out["error"] = {{"code", "internal-consistency"}, {"message", ex.what()}};
    pass = false;
  }
  out["checks"] = std::move(checks);
  out["verdict"] = out.contains("error") ? "error" : (pass ? "pass" : "fail");
  return out;
}

json run_battery_serial(const std::vector<ManifestEntry>& entries, const BatchOptions& options) {
  std::vector<json> results;
  results.reserve(entries.size());
  for (const auto& entry : entries) results.push_back(run_entry(entry, options));
  return summarize(std::move(results));
}

json run_battery_parallel(const std::vector<ManifestEntry>& entries, const BatchOptions& options) {
  std::vector<json> results(entries.size());
  const auto count = static_cast<long>(entries.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    results[static_cast<std::size_t>(i)] = run_entry(entries[static_cast<std::size_t>(i)], options);
  }
  return summarize(std::move(results));
}

}  // namespace zetaforge
