#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "linaut/alphabet.hpp"

namespace linaut {

// The two reading heads: Left consumes the input front to back, Right
// consumes it back to front.
enum class Head { Left, Right };

inline char head_char(Head h) { return h == Head::Left ? 'L' : 'R'; }

struct Transition {
    std::string from;
    Head head = Head::Left;
    char letter = 0;
    std::string to;

    friend bool operator==(const Transition&, const Transition&) = default;
};

struct ValidationReport {
    struct Violation {
        std::string subject;
        std::string description;
    };

    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

// Two-head finite automaton over an alphabet. The transition map may be
// partial and may be nondeterministic; the validators below tell the
// well-behaved subclasses apart. Instances are immutable once constructed.
class LinearAutomaton {
public:
    LinearAutomaton(Alphabet alphabet,
                    std::vector<std::string> states,
                    std::string initial,
                    std::vector<std::string> accepting,
                    std::vector<Transition> transitions);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<std::string>& states() const { return state_names_; }
    int state_count() const { return static_cast<int>(state_names_.size()); }
    const std::string& state_name(int index) const {
        return state_names_[static_cast<std::size_t>(index)];
    }
    int state_index(const std::string& name) const;

    const std::string& initial() const { return state_names_[static_cast<std::size_t>(initial_)]; }
    int initial_index() const { return initial_; }

    // Accepting state names in declaration order.
    std::vector<std::string> accepting() const;
    bool is_accepting(int state) const { return accepting_[static_cast<std::size_t>(state)]; }
    bool is_accepting(const std::string& name) const;

    // Target state indices of (state, head, letter), sorted ascending.
    // letter_index is a position in the alphabet; -1 yields no targets.
    const std::vector<int>& targets(int state, Head head, int letter_index) const;
    bool has_any(int state, Head head) const;

    // All transitions sorted by (from, head, letter, to) in declaration order.
    std::vector<Transition> canonical_transitions() const;

    // True when every state uses at most one head and every (head, letter)
    // has at most one target. Computed at construction.
    bool deterministic() const { return deterministic_; }
    // The single head a state reads with; nullopt when the state has no
    // transitions. Meaningful only for deterministic automata.
    std::optional<Head> active_head(int state) const {
        return active_head_[static_cast<std::size_t>(state)];
    }

    // True when every state (resp. every reachable state) has its active
    // head defined for every letter. False for nondeterministic automata.
    bool complete() const { return complete_; }
    bool complete_on_reachable() const { return complete_on_reachable_; }
    const std::vector<bool>& reachable() const { return reachable_; }

    friend bool operator==(const LinearAutomaton& lhs, const LinearAutomaton& rhs);

private:
    std::size_t slot(int state, Head head, int letter_index) const {
        return (static_cast<std::size_t>(state) * 2 + (head == Head::Right ? 1 : 0)) *
                   static_cast<std::size_t>(alphabet_.size()) +
               static_cast<std::size_t>(letter_index);
    }

    Alphabet alphabet_;
    std::vector<std::string> state_names_;
    std::unordered_map<std::string, int> state_index_;
    int initial_ = 0;
    std::vector<bool> accepting_;
    std::vector<std::vector<int>> delta_; // [state][head][letter] -> targets
    std::vector<int> empty_targets_;      // shared lookup result for -1 letters

    bool deterministic_ = false;
    std::vector<std::optional<Head>> active_head_;
    std::vector<bool> reachable_;
    bool complete_ = false;
    bool complete_on_reachable_ = false;
};

// Shape check for determinism: one head per state, one target per letter.
ValidationReport validate_deterministic(const LinearAutomaton& a);

// Requires a deterministic automaton; reports states whose active head does
// not cover every letter (restricted to reachable states when asked).
ValidationReport validate_complete(const LinearAutomaton& a, bool reachable_only);

// States reachable from the initial state, in declaration order.
std::vector<std::string> reachable_states(const LinearAutomaton& a);

// Adds one fresh non-accepting sink state and routes every missing
// (state, letter) entry to it; states without any transition are given the
// Left head. Already-complete automata are returned unchanged.
LinearAutomaton complete_with_sink(const LinearAutomaton& a);

// Same automaton with the accepting set complemented. Requires a complete
// deterministic automaton.
LinearAutomaton complement(const LinearAutomaton& a);

} // namespace linaut
