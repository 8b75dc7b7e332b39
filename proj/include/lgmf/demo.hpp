#pragma once

#include <iosfwd>

namespace lgmf {

/// Replays the worked examples, one named PASS/FAIL line each. Returns the
/// number of failures.
int run_worked_examples(std::ostream& out);

}  // namespace lgmf
