#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "linaut/automaton.hpp"

namespace linaut {

// A (prefix, suffix) pair: the words a run has consumed with the Left and
// Right head respectively.
struct Presu {
    std::string prefix;
    std::string suffix;

    std::size_t total_length() const { return prefix.size() + suffix.size(); }

    friend auto operator<=>(const Presu&, const Presu&) = default;
};

// Orders presus by total length, then prefix, then suffix, with letters
// compared in alphabet declaration order.
struct PresuLengthLex {
    const Alphabet* alphabet;

    bool operator()(const Presu& lhs, const Presu& rhs) const;
};

// A point in a computation: the current state plus the unread infix
// input[lo, hi). lo == hi means the heads have met.
struct Configuration {
    std::string state;
    std::size_t lo = 0;
    std::size_t hi = 0;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct StepOption {
    Configuration next;
    Head head = Head::Left;
    char letter = 0;
};

struct RunStep {
    std::string from;
    Head head = Head::Left;
    char letter = 0;
    std::string to;

    friend bool operator==(const RunStep&, const RunStep&) = default;
};

struct RunTrace {
    std::string input;
    std::vector<RunStep> steps;
    std::string final_state;
    bool accepted = false;
    // True when every input letter was consumed; a stuck run leaves the
    // unread infix input[lo, hi) behind.
    bool completed = false;
    std::size_t lo = 0;
    std::size_t hi = 0;
    // prefix = letters consumed by Left, suffix = letters consumed by Right;
    // prefix + suffix == input exactly when the run completed.
    Presu split;

    std::vector<Head> head_sequence() const;
};

// Every successor of configuration c on the given input, Left options before
// Right options. With a single unread letter both heads are candidates.
std::vector<StepOption> step(const LinearAutomaton& a,
                             const Configuration& c,
                             std::string_view input);

// Deterministic simulation from the initial state (or a named state).
// Rejects nondeterministic automata and words with foreign letters.
RunTrace run(const LinearAutomaton& a, std::string_view word);
RunTrace run_from(const LinearAutomaton& a, const std::string& start_state, std::string_view word);

// The (prefix, suffix) split of the unique computation on word. Requires a
// deterministic automaton complete on its reachable states.
Presu unique_split(const LinearAutomaton& a, std::string_view word);

// Checks that the first |word| steps on prefix + middle + suffix replay the
// run on word, for every given middle: same states, same consumed ends.
ValidationReport check_prefix_stability(const LinearAutomaton& a,
                                        std::string_view word,
                                        const std::vector<std::string>& middles);

} // namespace linaut
