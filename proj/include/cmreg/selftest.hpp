#pragma once

#include <ostream>

namespace cmreg {

/// Run the shipped fixtures and the property suites; print one line per
/// check. Returns the number of failed checks.
int run_selftest(std::ostream& out);

} // namespace cmreg
