#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fermatlab/families/adjudicate.hpp"
#include "fermatlab/symbolic/polynomial.hpp"
#include "fermatlab/verify/diagnostics.hpp"
#include "fermatlab/verify/scan.hpp"
#include "fermatlab/verify/zeros.hpp"

namespace fermatlab::verify {

using Json = nlohmann::ordered_json;

/// Serializes with every floating value printed as %.17g (non-finite values
/// become null); key order is insertion order, so output is reproducible.
std::string dumpJson(const Json& value, int indent = 2);

Json complexJson(Complex z);
/// {"degrees": [...], "coefficients": ["p/q", ...], "text": ...}, highest degree first.
Json polynomialJson(const symbolic::Polynomial& p, const std::string& variable);

Json reportJson(const Report& report);
/// Columns z_re, z_im, residual_abs, residual_rel, excluded.
std::string pointsCsv(const Report& report);

Json verdictJson(const families::Verdict& verdict);
Json zeroSetJson(const ZeroSet& set);
Json comparisonJson(const Comparison& comparison, Relation relation, MultiplicityMode mode);
Json attainmentJson(const std::vector<Attainment>& rows);
Json diagnosticJson(const DiagnosticReport& report);

}  // namespace fermatlab::verify
