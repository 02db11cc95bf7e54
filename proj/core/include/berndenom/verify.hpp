#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace berndenom {

/// Forces one check of one family to count as a failure. Lets callers
/// confirm that a broken identity is reported with its witness.
struct InjectedFault {
    std::string family;
    std::uint64_t n = 0;
};

struct VerifyOptions {
    std::uint64_t limit = 10000;        // identity families run over 1..limit
    std::uint64_t oracle_limit = 300;   // rational-polynomial families run over 1..oracle_limit
    std::uint64_t max_k = 3;            // derivative orders checked against the oracle
    std::optional<InjectedFault> fault;
};

struct FamilyResult {
    std::string name;
    bool passed = true;
    std::uint64_t checked = 0;
    std::optional<std::uint64_t> witness;  // first failing index
    std::string detail;
};

/// Names of all families, in the order run_verification reports them.
const std::vector<std::string>& verification_families();

/// Throws std::invalid_argument for limit < 1 or oracle_limit outside [1, 1000].
std::vector<FamilyResult> run_verification(const VerifyOptions& options);

}  // namespace berndenom
