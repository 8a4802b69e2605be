#pragma once

// Report builders shared by single commands and the batch runner.

#include <string>
#include <vector>

#include <json.hpp>

#include "zetaforge/error.hpp"
#include "zetaforge/ffengine.hpp"
#include "zetaforge/scheme.hpp"

namespace zetaforge::reports {

/// Parses and validates; error diagnostics become InvalidArgument.
SchemeExpr parse_checked(const std::string& src, nlohmann::json& diagnostics);

nlohmann::json error_json(const Error& e);

nlohmann::json special_value_json(const SpecialValue& v, long digits);

/// Analytic order against the conjectural order, and the secondary Euler
/// characteristic where per-degree data exists.
std::vector<VerificationReport> vanishing_order_reports(const SchemeExpr& e, long n);

/// One report per prime l <= bound other than the characteristic.
std::vector<VerificationReport> ell_reports(const SchemeExpr& e, long n, long bound);

bool all_pass(const std::vector<VerificationReport>& reports);
nlohmann::json to_json(const std::vector<VerificationReport>& reports);

}  // namespace zetaforge::reports
