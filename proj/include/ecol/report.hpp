#ifndef ECOL_REPORT_HPP
#define ECOL_REPORT_HPP

#include <string>

#include <json.hpp>

#include "ecol/verify.hpp"

namespace ecol {

using Record = nlohmann::ordered_json;

Record witness_record(const Witness& w);
/// Inverse of witness_record. Throws std::invalid_argument on a malformed
/// record.
Witness witness_from_record(const Record& r);

/// "type":"report". elapsed_ms only when timing is set.
Record report_record(const VerificationReport& r, bool timing = false);
/// "type":"summary".
Record summary_record(const CorpusSummary& s);
Record conjecture_record(const ConjectureScan& s);

/// One header line, then one indented line per violation.
std::string format_report(const VerificationReport& r, bool timing = false);
std::string format_summary(const CorpusSummary& s);
std::string format_conjecture(const ConjectureScan& s);

}  // namespace ecol

#endif  // ECOL_REPORT_HPP
