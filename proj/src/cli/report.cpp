#include "findim/report.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

namespace findim {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::indeterminate: return "indeterminate";
    case Status::error: return "error";
    case Status::skipped: return "skipped";
  }
  return "?";
}

Status parse_status(const std::string& s) {
  for (Status t : {Status::pass, Status::fail, Status::indeterminate, Status::error, Status::skipped})
    if (s == to_string(t)) return t;
  throw InputError("unknown status '" + s + "'");
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string CheckResult::digest() const { return fnv1a_hex(certificate.dump()); }

int VerificationReport::count(Status s) const {
  int n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

int VerificationReport::exit_code() const {
  if (count(Status::error)) return 3;
  if (count(Status::fail)) return 1;
  if (count(Status::indeterminate)) return 2;
  return 0;
}

json to_json(const DimValue& v) {
  switch (v.kind) {
    case DimValue::Kind::finite: return v.value;
    case DimValue::Kind::infinite: return "infinity";
    case DimValue::Kind::minus_infinity: return "-infinity";
  }
  return nullptr;
}

DimValue dim_value_from_json(const json& j) {
  if (j.is_number_integer()) return DimValue::finite(j.get<int>());
  if (j == "infinity") return DimValue::infinite();
  if (j == "-infinity") return DimValue::minus_infinity();
  throw InputError("malformed dimension value " + j.dump());
}

json to_json(const DimensionReport& r) {
  json factors = json::array();
  int cutoff = 0;
  for (const auto& f : r.factors) {
    json numbers = json::object();
    for (const auto& [i, n] : f.numbers) numbers[std::to_string(i)] = n;
    factors.push_back({{"factor", f.factor},
                       {"value", to_json(f.value)},
                       {"threshold", f.threshold},
                       {"cutoff", f.cutoff},
                       {"terminated", f.terminated},
                       {"numbers", numbers},
                       {"rule", f.rule}});
    cutoff = f.cutoff;
  }
  json j{{"kind", to_string(r.kind)},
         {"value", to_json(r.value)},
         {"cutoff", cutoff},
         {"certificate", {{"factors", factors}}},
         {"reduction-trace", r.trace}};
  if (r.value.kind == DimValue::Kind::minus_infinity) j["note"] = "zero object";
  return j;
}

DimensionReport dimension_report_from_json(const json& j) {
  DimensionReport r;
  const std::string kind = j.at("kind");
  if (kind == "proj") r.kind = DimKind::proj;
  else if (kind == "flat") r.kind = DimKind::flat;
  else if (kind == "inj") r.kind = DimKind::inj;
  else throw InputError("unknown dimension kind '" + kind + "'");
  r.value = dim_value_from_json(j.at("value"));
  for (const auto& f : j.at("certificate").at("factors")) {
    FactorCertificate c;
    c.factor = f.at("factor");
    c.value = dim_value_from_json(f.at("value"));
    c.threshold = f.at("threshold");
    c.cutoff = f.at("cutoff");
    c.terminated = f.at("terminated");
    for (const auto& [k, v] : f.at("numbers").items()) c.numbers[std::stoi(k)] = v.get<long>();
    c.rule = f.at("rule");
    r.factors.push_back(std::move(c));
  }
  r.trace = j.at("reduction-trace").get<std::vector<std::string>>();
  return r;
}

namespace {

json polys(const GradedRing& R, const std::vector<Poly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(R.str(p));
  return a;
}

}  // namespace

json to_json(const GradedRing& R, const DepthReport& r) {
  return {{"depth", r.depth},
          {"sequence", polys(R, r.sequence)},
          {"pool", polys(R, r.pool)},
          {"exhaustive", r.exhaustive}};
}

json to_json(const RegularityReport& r) {
  return {{"regular", r.regular}, {"first_bad", r.first_bad}, {"prefix_inf", r.prefix_inf}, {"inf_A", r.inf_A}};
}

json to_json(const LocalCohomologyReport& r) {
  json ext = json::object();
  for (const auto& [j, d] : r.ext_dims) ext[std::to_string(j)] = d;
  return {{"degrees", r.degrees},
          {"amp", r.amp()},
          {"route", "graded local duality over the ambient polynomial ring"},
          {"ambient_dim", r.ambient_dim},
          {"ext_dims", ext}};
}

json to_json(const DualizingReport& r) {
  return {{"inf", r.inf},
          {"shift", r.shift},
          {"twist", r.twist},
          {"injdim", to_json(r.injdim)},
          {"biduality", r.biduality},
          {"window", {r.window_lo, r.window_hi}}};
}

json to_json(const Witness& w) {
  return {{"label", w.label}, {"proj_dim", w.proj_dim}, {"inf", w.inf}, {"sup", w.sup}, {"value", w.value()}};
}

json to_json(const GradedRing& R, const WitnessRecipe& r) {
  json j{{"n", r.n}, {"available", r.available}, {"verified", r.verified}};
  if (!r.available) {
    j["reason"] = r.reason;
    return j;
  }
  j["factor"] = r.factor;
  j["prime"] = r.prime;
  j["sequence"] = polys(R, r.sequence);
  j["s"] = r.s ? json(R.str(*r.s)) : json(nullptr);
  j["localization"] = r.localization;
  j["description"] = r.description;
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

json to_json(const FinitisticReport& r) {
  json j{{"dim", r.dim}, {"amp", r.amp}};
  auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  j["fpd"] = opt(r.fpd);
  j["ffd"] = opt(r.ffd);
  j["fid"] = opt(r.fid);
  if (r.fpd_witness) j["fpd_witness"] = to_json(*r.fpd_witness);
  if (r.fid_witness_value) j["fid_witness"] = {{"module", r.fid_witness}, {"value", *r.fid_witness_value}};
  j["FPD"] = {r.FPD.lo, r.FPD.hi};
  j["FFD"] = {r.FFD.lo, r.FFD.hi};
  j["gorenstein_case"] = r.gorenstein_case;
  j["witness_case"] = r.witness_case;
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back(to_json(x));
  j["witnesses"] = w;
  j["notes"] = r.notes;
  return j;
}

json to_json(const GorensteinBoundReport& r) {
  json e = json::array();
  for (const auto& x : r.entries)
    e.push_back({{"module", x.label}, {"proj_dim", x.proj_dim}, {"inf", x.inf}, {"bound", x.bound}, {"ok", x.ok}});
  return {{"entries", e}, {"skipped", r.skipped}};
}

json to_json(const HochschildReport& r) {
  auto table = [](const std::map<int, std::vector<long>>& t) {
    json j = json::object();
    for (const auto& [i, h] : t) j[std::to_string(i)] = h;
    return j;
  };
  return {{"envelope", r.envelope},
          {"envelope_dim", r.envelope_dim},
          {"range", r.range},
          {"smooth", r.smooth},
          {"proj_dim", r.proj_dim},
          {"betti", r.betti},
          {"HH_lower", table(r.HH_lower)},
          {"HH_upper", table(r.HH_upper)},
          {"B_hilbert", r.B_hilbert}};
}

json to_json(const CohomologyProfile& p) {
  if (p.zero) return {{"zero", true}};
  return {{"zero", false}, {"inf", p.inf}, {"sup", p.sup}, {"amp", p.amp()}};
}

json to_json(const CheckResult& c) {
  json j{{"id", c.id},
         {"kind", c.kind},
         {"subject", c.subject},
         {"anchor", c.anchor},
         {"status", to_string(c.status)},
         {"value", c.value},
         {"certificate", c.certificate},
         {"digest", c.digest()}};
  if (!c.expected.is_null()) j["expected"] = c.expected;
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (!c.reproducer.is_null()) j["reproducer"] = c.reproducer;
  return j;
}

CheckResult check_from_json(const json& j) {
  CheckResult c;
  c.id = j.at("id");
  c.kind = j.at("kind");
  c.subject = j.at("subject");
  c.anchor = j.at("anchor");
  c.status = parse_status(j.at("status"));
  c.value = j.at("value");
  c.certificate = j.at("certificate");
  if (j.contains("expected")) c.expected = j["expected"];
  if (j.contains("detail")) c.detail = j["detail"];
  if (j.contains("reproducer")) c.reproducer = j["reproducer"];
  if (c.digest() != j.at("digest")) throw InputError("certificate digest mismatch for check " + c.id);
  return c;
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  json summary = json::object();
  for (Status s : {Status::pass, Status::fail, Status::indeterminate, Status::error, Status::skipped})
    summary[to_string(s)] = r.count(s);
  return {{"schema", kReportSchema},
          {"engine", kEngineVersion},
          {"options", r.options},
          {"checks", checks},
          {"summary", summary},
          {"exit_code", r.exit_code()}};
}

VerificationReport report_from_json(const json& j) {
  if (j.at("schema") != kReportSchema) throw InputError("unsupported report schema " + j.at("schema").dump());
  VerificationReport r;
  r.options = j.at("options");
  for (const auto& c : j.at("checks")) r.checks.push_back(check_from_json(c));
  return r;
}

std::string emit_report(const VerificationReport& r, const std::string& format) {
  if (format == "json") return to_json(r).dump(2) + "\n";
  if (format != "text") throw InputError("unknown format '" + format + "' (expected json or text)");
  std::ostringstream out;
  char buf[32];
  for (const auto& c : r.checks) {
    std::snprintf(buf, sizeof buf, "%.2f s", c.seconds);
    out << to_string(c.status) << "  " << c.id << "  " << c.subject;
    if (!c.value.is_null()) out << "  = " << c.value.dump();
    out << "  (" << buf << ")\n";
    if (c.status != Status::pass) {
      out << "    anchor: " << c.anchor << "\n";
      if (!c.expected.is_null()) out << "    expected: " << c.expected.dump() << "\n";
      if (!c.detail.empty()) out << "    " << c.detail << "\n";
    }
  }
  std::snprintf(buf, sizeof buf, "%.2f s", r.seconds);
  out << r.count(Status::pass) << " passed, " << r.count(Status::fail) << " failed, " << r.count(Status::indeterminate)
      << " indeterminate, " << r.count(Status::error) << " errors, " << r.count(Status::skipped) << " skipped in "
      << buf << "\n";
  return out.str();
}

}  // namespace findim
