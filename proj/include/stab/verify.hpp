#pragma once

// The self-verification suite behind `stab verify`: exact identity and
// property checks over fixed deterministic grids and seeded random
// samples. Every check is all-or-nothing with zero tolerance.

#include <string>
#include <vector>

namespace stab {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

/// Runs the whole suite; genus only feeds the surface constructor (the
/// lattice identities are genus-independent), e ranges over built-in
/// grids.
std::vector<CheckResult> run_verify(long long genus);

}  // namespace stab
