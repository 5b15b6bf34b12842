#pragma once

#include "znalg/zn.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace znalg {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string note;
    double seconds = 0.0;
};

/// Run the invariant suite for every odd n' <= n and print one line per check.
/// Returns true when everything passed.
bool run_check_all(int n, std::ostream& os);

}  // namespace znalg
