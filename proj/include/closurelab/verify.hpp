#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace closurelab {

struct SuiteReport
{
    std::string name;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    /// Smallest failing instance found, as text; empty when all pass.
    std::string counterexample;

    bool passed() const { return failures == 0; }
};

/// farkas, cone, covering, aggregation.
const std::vector<std::string>& suite_names();

/// Runs one suite (or every suite for "all") on instances drawn from
/// `seed`. Throws ContractViolation for an unknown name.
std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed);

} // namespace closurelab
