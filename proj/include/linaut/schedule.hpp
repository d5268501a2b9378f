#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "linaut/run.hpp"

namespace linaut {

// A head-usage rate m/n: n Left reads followed by m Right reads, repeating.
// Normalized to lowest terms at construction; 0/1 is the all-Left case.
class Rate {
public:
    Rate(std::uint64_t m, std::uint64_t n);

    std::uint64_t m() const { return m_; }
    std::uint64_t n() const { return n_; }
    std::string to_string() const;

    // Parses "m/n" or a bare "m" (meaning m/1).
    static Rate parse(std::string_view text);

    friend bool operator==(const Rate&, const Rate&) = default;

private:
    std::uint64_t m_;
    std::uint64_t n_;
};

// The length-len prefix of the periodic head schedule (Left^n Right^m)^ω.
std::vector<Head> schedule_for(const Rate& rate, std::size_t len);

struct ConformanceViolation {
    std::string word;
    std::size_t step = 0; // 1-based
    Head expected = Head::Left;
    Head actual = Head::Left;
};

// One violation per deviating word: the first step whose head differs from
// the schedule. Stuck runs are compared over the steps actually taken.
struct ConformanceReport {
    std::vector<ConformanceViolation> violations;
    std::size_t words_checked = 0;

    bool ok() const { return violations.empty(); }
};

ConformanceReport check_conformance(const LinearAutomaton& a,
                                    const Rate& rate,
                                    const std::vector<std::string>& words);

} // namespace linaut
