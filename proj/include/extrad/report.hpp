#ifndef EXTRAD_REPORT_HPP
#define EXTRAD_REPORT_HPP

#include <iosfwd>
#include <vector>

#include "extrad/pinch.hpp"

namespace extrad {

// Fixed CSV schema; floats print with 17 significant digits so rows
// round-trip bit exactly.  Fields that do not apply (gap_2p for delta < 0,
// alpha for delta >= 0, slacks with a failed hypothesis) print as "na" and
// serialize to JSON null.
extern const char* const report_columns[24];

std::string csv_header();
std::string csv_row(const PinchReport& r);
void write_csv(const std::vector<PinchReport>& rows, std::ostream& os);
void write_json(const std::vector<PinchReport>& rows, std::ostream& os);

} // namespace extrad

#endif
