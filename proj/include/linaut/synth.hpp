#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linaut/border.hpp"

namespace linaut {

// A side of a class: the Left (prefix-extending) or Right (suffix-extending)
// face. Sides reuse Head since they name the head that reads there.
struct ClassRef {
    std::string class_id;
    Head side = Head::Left;

    friend bool operator==(const ClassRef&, const ClassRef&) = default;
};

struct BCClass {
    std::string id;
    bool accepting = false;
    // letter -> target (class, side); a present side must cover the alphabet.
    std::optional<std::map<char, ClassRef>> left;
    std::optional<std::map<char, ClassRef>> right;
};

// A class structure to synthesize an automaton from: one or two sides per
// class, each side total over the alphabet.
struct BCSpec {
    Alphabet alphabet;
    ClassRef initial;
    std::vector<BCClass> classes;
};

struct SynthesisResult {
    LinearAutomaton automaton;
    // (class id, side) -> state name.
    std::map<std::pair<std::string, Head>, std::string> state_of;
};

// Checks the structural invariants: unique ids, at least one side per class,
// sides total over the alphabet, every reference naming an existing side.
ValidationReport validate_bc_spec(const BCSpec& spec);

// Builds the automaton with one Left state q_<id> per left side and one
// Right state p_<id> per right side; all sides of accepting classes accept.
// The result is complete and deterministic. Rejects invalid specs.
SynthesisResult build_automaton(const BCSpec& spec);

// Reads a spec back off an automaton: classes are merge_classes groups of
// reachable states (middles up to mid_bound), each state contributing the
// side of its head. Requires a deterministic automaton complete on its
// reachable states.
BCSpec derive_bc_spec(const LinearAutomaton& a,
                      std::size_t mid_bound,
                      std::size_t budget = kDefaultBudget);

// derive -> build -> compare: reports bounded language equality (words up to
// bound) between a and the automaton rebuilt from its derived spec.
ValidationReport roundtrip_check(const LinearAutomaton& a,
                                 std::size_t bound,
                                 std::size_t mid_bound,
                                 std::size_t budget = kDefaultBudget);

} // namespace linaut
