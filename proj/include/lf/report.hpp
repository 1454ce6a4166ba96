#ifndef LF_REPORT_HPP
#define LF_REPORT_HPP

#include <iosfwd>
#include <string>

#include "lf/characterization.hpp"

namespace lf {

/// One JSON document with fixed key order and 17-significant-digit floats,
/// suitable for golden-file comparison: identical config and seed produce
/// byte-identical output. `canonical_config` is embedded verbatim under
/// "config".
std::string serialize_report(const CheckReport& report, const std::string& canonical_config);

/// Human-readable one-screen summary.
void print_report_summary(std::ostream& os, const CheckReport& report);

std::string serialize_harness_summary(const HarnessSummary& summary);
void print_harness_summary(std::ostream& os, const HarnessSummary& summary);

}  // namespace lf

#endif
