#ifndef LF_SELFTEST_HPP
#define LF_SELFTEST_HPP

#include <iosfwd>

namespace lf {

/// Runs every module's invariant suite at p = 2, M = N = 4 (plus small
/// fields for the exhaustive algebra checks) and prints a summary table.
/// Returns true when every suite passes.
bool run_selftest(std::ostream& os);

}  // namespace lf

#endif
