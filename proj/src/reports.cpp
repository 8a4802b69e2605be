#include "reports.hpp"

#include "zetaforge/archimedean.hpp"
#include "zetaforge/dsl.hpp"

namespace zetaforge::reports {

SchemeExpr parse_checked(const std::string& src, nlohmann::json& diagnostics) {
  SchemeExpr e = parse_expr(src);
  const auto found = validate(e);
  diagnostics = nlohmann::json::array();
  std::string errors;
  for (const auto& d : found) {
    const bool is_error = d.severity == Diagnostic::Severity::Error;
    diagnostics.push_back({{"severity", is_error ? "error" : "warning"}, {"path", d.path}, {"message", d.message}});
    if (is_error) errors += (errors.empty() ? "" : "; ") + d.path + ": " + d.message;
  }
  if (!errors.empty()) throw Error(ErrorCode::InvalidArgument, errors);
  return e;
}

nlohmann::json error_json(const Error& e) { return {{"code", code_name(e.code())}, {"message", e.what()}}; }

nlohmann::json special_value_json(const SpecialValue& v, long digits) {
  nlohmann::json j;
  j["order"] = v.order;
  j["exact"] = v.is_exact();
  j["value"] = v.exact ? nlohmann::json(v.exact->get_str()) : nlohmann::json(nullptr);
  j["numeric"] = v.numeric.to_string(digits);
  j["error_bound"] = v.error_bound.to_string(3);
  return j;
}

std::vector<VerificationReport> vanishing_order_reports(const SchemeExpr& e, long n) {
  std::vector<VerificationReport> out;
  const long analytic = order_at(zeta_of(e), n);
  const long conjectural = vanishing_order_conjectural(e, n);
  VerificationReport vo;
  vo.claim = "VO: ord_{s=n} zeta(X,s) = chi(equivariant cohomology)";
  vo.left = std::to_string(analytic);
  vo.right = std::to_string(conjectural);
  vo.pass = analytic == conjectural;
  vo.context["expr"] = print_expr(e);
  vo.context["n"] = std::to_string(n);
  out.push_back(std::move(vo));
  if (!equivariant_dims(e).for_n(n).euler_only) {
    VerificationReport sec;
    sec.claim = "secondary Euler characteristic equals chi";
    sec.left = std::to_string(secondary_euler_vo(e, n));
    sec.right = std::to_string(conjectural);
    sec.pass = sec.left == sec.right;
    sec.context["expr"] = print_expr(e);
    sec.context["n"] = std::to_string(n);
    out.push_back(std::move(sec));
  }
  return out;
}

std::vector<VerificationReport> ell_reports(const SchemeExpr& e, long n, long bound) {
  const Integer p = characteristic(e);
  std::vector<VerificationReport> out;
  for (long ell : primes_up_to(bound))
    if (p != ell) out.push_back(ell_adic_check(e, n, ell));
  return out;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

nlohmann::json to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : reports) j.push_back(r.to_json());
  return j;
}

}  // namespace zetaforge::reports
