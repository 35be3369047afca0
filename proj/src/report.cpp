#include "bck/report.hpp"

#include "bck/enumeration.hpp"

namespace bck {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::violation: return "violation";
    case Status::vacuous: return "vacuous";
  }
  return "?";
}

std::string to_json_line(const ReportRecord& record) {
  Json doc;
  doc["algebra_id"] = record.algebra_id;
  doc["check"] = record.check;
  doc["status"] = std::string(to_string(record.status));
  doc["witness"] = record.witness;
  return doc.dump();
}

std::map<std::string, std::size_t> tally(
    const std::vector<ReportRecord>& records) {
  std::map<std::string, std::size_t> out{
      {"ok", 0}, {"vacuous", 0}, {"violation", 0}};
  for (const auto& r : records) ++out[std::string(to_string(r.status))];
  return out;
}

std::string report_id(const Algebra& algebra) {
  return algebra_id(canonical_form(algebra));
}

Json to_json(const Ideal& ideal) { return Json(ideal.elements); }

Json to_json(const Congruence& congruence) {
  Json classes = Json::array();
  for (const auto& cls : congruence.classes()) classes.push_back(cls);
  return classes;
}

ReportRecord theta_report(const Algebra& algebra,
                          const std::vector<ThetaViolation>& violations) {
  ReportRecord record{report_id(algebra), "theta_maximality",
                      violations.empty() ? Status::ok : Status::violation,
                      Json::array()};
  for (const auto& v : violations) {
    Json item;
    item["kind"] = v.kind;
    item["ideal"] = to_json(v.ideal);
    item["congruence"] = to_json(v.congruence);
    record.witness.push_back(std::move(item));
  }
  return record;
}

}  // namespace bck
