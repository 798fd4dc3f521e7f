#pragma once

#include <string>
#include <vector>

#include "findim/finitistic.hpp"
#include "json.hpp"

namespace findim {

using json = nlohmann::json;

inline constexpr const char* kEngineVersion = "findim 1.0.0";
inline constexpr const char* kReportSchema = "findim-report/1";
inline constexpr const char* kScenarioSchema = "findim-scenario/1";

enum class Status { pass, fail, indeterminate, error, skipped };
const char* to_string(Status s);
Status parse_status(const std::string& s);

struct CheckResult {
  std::string id;
  std::string kind;
  std::string subject;
  std::string anchor;
  Status status = Status::pass;
  json value;
  json expected;
  json certificate;
  std::string detail;
  /// Smallest input reproducing a failure; null on success.
  json reproducer;
  double seconds = 0;  // text output only
  std::string digest() const;
};

struct VerificationReport {
  json options = json::object();
  std::vector<CheckResult> checks;
  double seconds = 0;  // text output only

  int count(Status s) const;
  /// 0 pass, 1 check failure, 2 indeterminate, 3 input error.
  int exit_code() const;
};

/// 64-bit FNV-1a of a byte string, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

json to_json(const DimValue& v);
DimValue dim_value_from_json(const json& j);
json to_json(const DimensionReport& r);
DimensionReport dimension_report_from_json(const json& j);
json to_json(const GradedRing& R, const DepthReport& r);
json to_json(const RegularityReport& r);
json to_json(const LocalCohomologyReport& r);
json to_json(const DualizingReport& r);
json to_json(const Witness& w);
json to_json(const GradedRing& R, const WitnessRecipe& r);
json to_json(const FinitisticReport& r);
json to_json(const GorensteinBoundReport& r);
json to_json(const HochschildReport& r);
json to_json(const CohomologyProfile& p);

json to_json(const CheckResult& c);
CheckResult check_from_json(const json& j);
json to_json(const VerificationReport& r);
VerificationReport report_from_json(const json& j);

/// "json" or "text"; json output is byte-stable for fixed inputs.
std::string emit_report(const VerificationReport& r, const std::string& format);

}  // namespace findim
