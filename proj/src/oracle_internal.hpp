#pragma once

#include <cstddef>
#include <string>

#include "linaut/oracle.hpp"

namespace linaut::detail {

// Shared accounting for sweeps that spread one budget over many bounded
// equivalence checks.
struct BudgetCounter {
    std::size_t used = 0;
    std::size_t budget = kDefaultBudget;
    const char* op = "oracle";

    void charge(std::size_t tests) {
        used += tests;
        if (used > budget) {
            throw BudgetExceeded(std::string(op) + ": membership-test budget of " +
                                 std::to_string(budget) + " exceeded");
        }
    }
};

EquivalenceVerdict presu_equiv_counted(const LanguagePredicate& language,
                                       const Presu& p1,
                                       const Presu& p2,
                                       std::size_t mid_bound,
                                       BudgetCounter& counter);

EquivalenceVerdict state_equiv_counted(const LinearAutomaton& a,
                                       const std::string& s1,
                                       const std::string& s2,
                                       std::size_t mid_bound,
                                       BudgetCounter& counter);

} // namespace linaut::detail
