#pragma once

#include <json.hpp>

#include "flagcodes/construct.hpp"
#include "flagcodes/oracle.hpp"

namespace flagcodes::checks {

struct CheckOptions {
    u64 seed = 1;
    u64 budget = u64(1) << 20;  // transversal scan cap
    int jobs = 1;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
    nlohmann::json counterexample;

    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    void fail(const std::string& why, nlohmann::json evidence = {}) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
        if (counterexample.is_null()) counterexample = std::move(evidence);
    }
};

std::vector<std::string> suite_names();

/// Run a named verification suite ("field", "metric", "subspace", "flag",
/// "bounds", "construct", "oracle" or "all").
std::vector<CheckResult> run_suite(const std::string& suite, const CheckOptions& opts = {});

/// Shared cache of field contexts used by sweeps (tables for small fields,
/// polynomial arithmetic beyond the cap).
std::shared_ptr<const FieldCtx> cached_field(u64 q, int n);

}  // namespace flagcodes::checks
