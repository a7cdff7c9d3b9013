#pragma once

#include <string>

#include <json.hpp>

#include "exdef/deformation.hpp"
#include "exdef/modtools.hpp"
#include "exdef/regularity.hpp"

namespace exdef {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "exdef/1";

/// Report envelope: {"schema": ..., "command": ...}.
Json report_envelope(const std::string& command);

/// Rationals are always emitted as exact strings "p/q", never numbers.
Json json_rational(const Rational& value);

Json json_table(const DegreeTable& table);
Json json_phi_rows(const std::vector<PhiRow>& rows);
Json json_counterexample(const LinearityCounterexample& ce);
Json json_linearization(const LinearizationReport& report, int var_count, int q,
                        int a);
Json json_certificate(const ReductionCertificate& cert,
                      const ActionCoefficients& A);

/// Closed-form coefficient strings in (r, b, c): alpha = (b - TH)/(b + c - TH),
/// beta = 1/(b + c - TH), TH the linear expression a(r/q + (-1)^q t).
Json json_coefficients(const ActionCoefficients& A, int r_limit);

std::string csv_table(const DegreeTable& table);
std::string csv_phi_rows(const std::vector<PhiRow>& rows);

}  // namespace exdef
