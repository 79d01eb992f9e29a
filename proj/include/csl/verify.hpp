#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace csl {

struct VerifyCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::uint32_t bound = 0;
    std::vector<VerifyCheck> checks;

    bool passed() const;
    std::size_t failures() const;
};

/// "square", "shifted", "cubic", "diamond", "multilattice".
const std::vector<std::string>& suite_names();

/// Compares closed forms and engine results against the oracle up to the
/// bound (index for planar suites, |q|^2 for the others). Throws
/// DomainError for an unknown suite.
VerifyReport run_suite(std::string_view suite, std::uint32_t bound);

}  // namespace csl
