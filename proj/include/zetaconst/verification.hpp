#pragma once

#include <string>
#include <vector>

namespace zetaconst {

// Named self-checks grouped into suites:
//   exact      -- prefix terms and exact table identities (< 10 s)
//   identities -- transform/product/duality identity batteries
//   numeric    -- registry digits, relation web, convergence spot checks
//   all        -- everything above
// Every check has a stable id so failures can be traced to the exact
// property that broke.
struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

std::vector<CheckResult> run_suite(const std::string& suite);
const std::vector<std::string>& suite_names();

}  // namespace zetaconst
