#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bck/algebra.hpp"
#include "bck/structure.hpp"

namespace bck {

using Json = nlohmann::ordered_json;

enum class Status { ok, violation, vacuous };
std::string_view to_string(Status s);

// One line of a JSONL report.
struct ReportRecord {
  std::string algebra_id;
  std::string check;
  Status status = Status::ok;
  Json witness;
};

std::string to_json_line(const ReportRecord& record);

// Counts per status, keyed by status name.
std::map<std::string, std::size_t> tally(const std::vector<ReportRecord>& records);

// Id used in reports: the catalog digest of the canonical form.
std::string report_id(const Algebra& algebra);

Json to_json(const Ideal& ideal);
Json to_json(const Congruence& congruence);

ReportRecord theta_report(const Algebra& algebra,
                          const std::vector<ThetaViolation>& violations);

}  // namespace bck
