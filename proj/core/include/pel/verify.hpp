#pragma once

#include <string>
#include <vector>

#include "pel/padic.hpp"

namespace pel {

// One executed proposition check. A fail always carries both computed sides.
struct VerifyItem {
    std::string id;       // proposition id, e.g. "11.3.9"
    std::string params;   // human-readable instance parameters
    std::string status;   // "pass" | "fail" | "skipped"
    std::string lhs;      // serialized witness values
    std::string rhs;
    double elapsed_ms = 0.0;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_passed() const;
    long failures() const;
};

// The documented suite ids, in canonical order.
const std::vector<std::string>& known_suites();
bool is_known_suite(const std::string& id);

// Runs the chosen proposition suites at desk-scale parameters for (p, M).
VerifyReport run_verification(const std::vector<std::string>& suite_ids,
                              long p, int target_precision);

} // namespace pel
