#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tonal {

struct ClaimResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    uint64_t seed = 0;
    double budget_seconds = 1e18;    // wall-clock hint; claims not started in time are skipped
    int workers = 0;                 // parallelism hint, forwarded to the kernels
    long long canonical_limit = 10000;
    bool corrupt_canonical = false;  // test hook: flip one canonical edge before claim 2
    std::function<void(const ClaimResult&)> on_claim;  // streamed as each claim finishes
};

struct VerifyReport {
    std::vector<ClaimResult> claims;
    bool incomplete = false;  // some claim was skipped on budget

    bool all_passed() const {
        for (const auto& c : claims)
            if (!c.skipped && !c.pass) return false;
        return !claims.empty();
    }
    int failed_count() const {
        int f = 0;
        for (const auto& c : claims)
            if (!c.skipped && !c.pass) ++f;
        return f;
    }
};

// Runs the full desk-scale replication suite: nine claims, each an exact
// finite certificate for one of the structural statements about omnitonal
// and totally-omnitonal graphs. Deterministic for a fixed seed, independent
// of the worker count.
VerifyReport run_verification(const VerifyOptions& opts = {});

}  // namespace tonal
