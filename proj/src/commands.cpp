#include "zetaforge/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "reports.hpp"
#include "zetaforge/archimedean.hpp"
#include "zetaforge/batch.hpp"
#include "zetaforge/detcomplex.hpp"
#include "zetaforge/dsl.hpp"

namespace zetaforge {

namespace {

using nlohmann::json;

long require_n(const Command& cmd) {
  if (!cmd.n) throw Error(ErrorCode::InvalidArgument, cmd.verb + " needs -n <negative integer>");
  if (*cmd.n >= 0) throw Error(ErrorCode::InvalidArgument, "n must be negative, got " + std::to_string(*cmd.n));
  return *cmd.n;
}

const char* verdict(bool pass) { return pass ? "pass" : "fail"; }

json poly_json(const IntPoly& p) {
  json j = json::array();
  for (const auto& c : p) j.push_back(c.get_str());
  return j;
}

json zeta_report(const SchemeExpr& e, long series_order) {
  const ZetaProduct z = zeta_of(e);
  json j;
  j["zeta"] = z.to_string();
  j["finite_char"] = json::array();
  for (const auto& [f, exp] : z.finite_char()) {
    j["finite_char"].push_back({{"q", f.q.get_str()},
                                {"numerator", poly_json(f.Z.numerator())},
                                {"denominator", poly_json(f.Z.denominator())},
                                {"exponent", exp}});
  }
  j["char_zero"] = json::array();
  for (const auto& [l, exp] : z.char_zero()) {
    j["char_zero"].push_back({{"character", l.chi.key()},
                              {"conductor", l.chi.modulus()},
                              {"parity", l.chi.parity()},
                              {"shift", l.shift},
                              {"exponent", exp}});
  }
  if (z.is_finite_characteristic() && z.bases().size() == 1) {
    json coeffs = json::array();
    for (const auto& c : power_series(z, series_order)) coeffs.push_back(c.get_str());
    j["series"] = coeffs;
  }
  return j;
}

json det_report(const std::string& path, bool& pass) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open complex file " + path);
  json data;
  try {
    in >> data;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::MalformedComplex, std::string("complex file is not JSON: ") + ex.what());
  }
  const BoundedFreeComplex c = BoundedFreeComplex::from_json(data);
  json j;
  j["file"] = path;
  j["cohomology"] = json::object();
  for (int i = c.lo(); i <= c.hi(); ++i) j["cohomology"][std::to_string(i)] = cohomology(c, i).to_string();
  const EulerCharacteristics ec = euler_characteristics(c);
  j["euler"] = {{"chi", ec.chi}, {"secondary", ec.secondary}};
  const GradedLine line = determinant(c);
  j["ideal"] = line.ideal ? json(line.ideal->get_str()) : json(nullptr);
  j["grade"] = line.grade;
  // Both routes are reported; they must agree.
  const GradedLine termwise = determinant_termwise(c);
  j["termwise_ideal"] = termwise.ideal ? json(termwise.ideal->get_str()) : json(nullptr);
  pass = termwise == line;
  j["verdict"] = verdict(pass);
  return j;
}

Outcome dispatch(const Command& cmd) {
  Outcome out;
  json& r = out.report;
  r["verb"] = cmd.verb;
  bool pass = true;

  if (cmd.verb == "batch") {
    if (!cmd.manifest) throw Error(ErrorCode::InvalidArgument, "batch needs --manifest <path>");
    BatchOptions options;
    options.series_order = cmd.series_order;
    options.precision = cmd.precision;
    json battery = run_battery_parallel(load_manifest(*cmd.manifest), options);
    r["manifest"] = *cmd.manifest;
    r.update(battery);
    pass = battery["verdict"] == "pass";
    out.exit_code = pass ? 0 : 1;
    return out;
  }

  if (cmd.verb == "det") {
    r.update(det_report(cmd.target, pass));
    out.exit_code = pass ? 0 : 1;
    return out;
  }

  if (cmd.verb == "ord" && cmd.hodge) {
    const long n = require_n(cmd);
    json hodge_src;
    try {
      hodge_src = json::parse(*cmd.hodge);
    } catch (const json::exception& ex) {
      throw Error(ErrorCode::InvalidArgument, std::string("--hodge is not JSON: ") + ex.what());
    }
    const HodgeData h = HodgeData::from_json(hodge_src);
    const auto dims = hodge_equivariant_dims(h, n);
    long alternating = 0;
    json dims_json = json::object();
    for (const auto& [i, d] : dims) {
      dims_json[std::to_string(i)] = d;
      alternating += (i % 2 == 0 ? d : -d);
    }
    const long gamma = gamma_factor_order(h, n);
    r["n"] = n;
    r["hodge"] = h.to_json();
    r["dims"] = dims_json;
    r["conjectural"] = alternating;
    r["gamma_order"] = gamma;
    pass = gamma == alternating;
    r["verdict"] = verdict(pass);
    out.exit_code = pass ? 0 : 1;
    return out;
  }

  json diagnostics;
  const SchemeExpr e = reports::parse_checked(cmd.target, diagnostics);
  r["expr"] = print_expr(e);
  if (!diagnostics.empty()) r["diagnostics"] = diagnostics;

  if (cmd.verb == "zeta") {
    r.update(zeta_report(e, cmd.series_order));
    return out;
  }
  if (cmd.verb == "trace-check") {
    const auto rep = trace_formula_check(e, cmd.series_order);
    r["report"] = rep.to_json();
    pass = rep.pass;
  } else {
    const long n = require_n(cmd);
    r["n"] = n;
    if (cmd.verb == "ord") {
      const auto reps = reports::vanishing_order_reports(e, n);
      r["analytic"] = std::stol(reps[0].left);
      r["conjectural"] = std::stol(reps[0].right);
      r["secondary"] = reps.size() > 1 ? json(std::stol(reps[1].left)) : json(nullptr);
      pass = reports::all_pass(reps);
    } else if (cmd.verb == "verify-vo") {
      const auto reps = reports::vanishing_order_reports(e, n);
      r["reports"] = reports::to_json(reps);
      pass = reports::all_pass(reps);
    } else if (cmd.verb == "value") {
      r["precision"] = cmd.precision;
      r.update(reports::special_value_json(evaluate_at(zeta_of(e), n, cmd.precision), cmd.precision));
      return out;
    } else if (cmd.verb == "verify-c") {
      const auto rep = verify_C_finite_char(e, n);
      r["report"] = rep.to_json();
      pass = rep.pass;
    } else if (cmd.verb == "p-check") {
      const auto rep = p_part_check(e, n);
      r["report"] = rep.to_json();
      pass = rep.pass;
    } else if (cmd.verb == "ell-check") {
      std::vector<VerificationReport> reps;
      if (cmd.ell) {
        reps.push_back(ell_adic_check(e, n, *cmd.ell));
      } else {
        reps = reports::ell_reports(e, n, 50);
      }
      r["reports"] = reports::to_json(reps);
      pass = reports::all_pass(reps);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown verb '" + cmd.verb + "'");
    }
  }
  r["verdict"] = verdict(pass);
  out.exit_code = pass ? 0 : 1;
  return out;
}

void render_text(const json& j, const std::string& indent, std::ostringstream& os) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n";
      render_text(value, indent + "  ", os);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << indent << key << ":\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        os << indent << "  [" << i << "]\n";
        render_text(value[i], indent + "    ", os);
      }
    } else if (value.is_string()) {
      os << indent << key << ": " << value.get<std::string>() << "\n";
    } else {
      os << indent << key << ": " << value.dump() << "\n";
    }
  }
}

}  // namespace

long default_precision() {
  if (const char* env = std::getenv("ZETAFORGE_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultPrecision;
}

std::string Outcome::render(const std::string& format) const {
  if (format == "json") return report.dump(2) + "\n";
  std::ostringstream os;
  render_text(report, "", os);
  return os.str();
}

Outcome run(const Command& cmd) {
  try {
    if (cmd.precision < 1) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
    if (cmd.series_order < 1) throw Error(ErrorCode::InvalidArgument, "series order must be positive");
    if (cmd.format != "text" && cmd.format != "json") {
      throw Error(ErrorCode::InvalidArgument, "format must be text or json");
    }
    return dispatch(cmd);
  } catch (const Error& e) {
    Outcome out;
    out.report["verb"] = cmd.verb;
    out.report["error"] = reports::error_json(e);
    out.report["verdict"] = "error";
    out.exit_code = 2;
    return out;
  }
}

}  // namespace zetaforge
