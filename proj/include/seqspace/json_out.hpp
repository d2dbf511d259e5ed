#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "seqspace/duality.hpp"
#include "seqspace/matrix_class.hpp"
#include "seqspace/paranorm.hpp"

namespace seqspace {

// All serializers use nlohmann's default (key-sorted) object type and its
// shortest round-trip number printing, so identical inputs give
// byte-identical output. Rationals become {"den": "...", "num": "..."}
// strings to survive arbitrary precision; non-finite doubles become the
// strings "inf", "-inf", "nan".

nlohmann::json json_number(double v);
nlohmann::json json_rational(const Rational& r);
nlohmann::json json_scalar(const Scalar& s);
nlohmann::json json_verdict(const Verdict& v);
nlohmann::json json_curve(const std::vector<CurvePoint>& curve);

nlohmann::json json_values(const std::vector<double>& v);
nlohmann::json json_values(const std::vector<Rational>& v);

nlohmann::json json_series_probe(const SeriesProbe& p);
nlohmann::json json_sup_probe(const SupProbe& p);
nlohmann::json json_limit_zero(const LimitZeroProbe& p);

nlohmann::json json_lambda_report(const LambdaReport& r);
nlohmann::json json_paranorm(const ParanormReport& r);
nlohmann::json json_membership(const MembershipReport& r);
nlohmann::json json_thm4(const Thm4Report& r);
nlohmann::json json_thm5(const Thm5Report& r);
nlohmann::json json_dual(const DualReport& r);
nlohmann::json json_condition(const ConditionResult& r);
nlohmann::json json_classification(const ClassificationResult& r);

/// One CSV cell: shortest round-trip float or exact num/den text.
std::string csv_cell(double v);
std::string csv_cell(const Rational& v);

}  // namespace seqspace
