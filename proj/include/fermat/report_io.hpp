#ifndef FERMAT_REPORT_IO_HPP
#define FERMAT_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "fermat/recovery.hpp"

namespace fermat {

// Key order is part of the output contract: reports are emitted with a
// fixed layout so identical runs serialize byte-identically. All big
// integers and rationals travel as decimal strings, never JSON numbers.
using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "fermat-descent/report-v1";

Json report_to_json(const SolutionReport& report);
SolutionReport report_from_json(const Json& j);

std::string render_human(const SolutionReport& report);

Json bounds_to_json(const SearchBounds& bounds);
SearchBounds bounds_from_json(const Json& j);

Json triplet_to_json(const Triplet& t);
Triplet triplet_from_json(const Json& j);

} // namespace fermat

#endif
