#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linaut/oracle.hpp"
#include "linaut/run.hpp"

namespace linaut {

// The classes a breadth-first sweep of a deterministic automaton assigns to
// presus of total length <= bound. Classes are keyed by reachable states;
// every assigned presu is the split the automaton itself produces.
struct PseudoBC {
    std::size_t bound = 0;
    // Set by merge_classes: results are then "equivalent up to mid_bound".
    std::optional<std::size_t> merged_mid_bound;
    // Class ids (representative state names) in state declaration order.
    std::vector<std::string> class_order;
    // Class id -> presus, in length-lex order. Present for every reachable
    // state, possibly empty at small bounds.
    std::map<std::string, std::vector<Presu>> classes;
    // Reachable state -> class id.
    std::map<std::string, std::string> class_of_state;
    // Assigned presu -> class id.
    std::map<Presu, std::string> assignment;
};

struct BCCheckReport {
    bool complete_up_to = true;
    // Words matched by zero or several presus, with their matches.
    std::vector<std::pair<std::string, std::vector<Presu>>> missing_or_duplicated;
    // Pairs ((u1,v1),(u2,v2)) with u1 a proper prefix of u2 and v2 a proper
    // suffix of v1.
    std::vector<std::pair<Presu, Presu>> crossing_pairs;

    bool ok() const { return complete_up_to && crossing_pairs.empty(); }
};

// Breadth-first class assignment: (empty, empty) joins the initial state's
// class; a class with Left-head state q sends (u, v) to (u + a, v) in the
// class of q's a-target, and symmetrically for Right. Requires a
// deterministic automaton complete on its reachable states.
PseudoBC enumerate_pseudo_bc(const LinearAutomaton& a, std::size_t bound);

// Does every word of length <= bound decompose as exactly one of the presus?
BCCheckReport check_complete(const std::vector<Presu>& presus,
                             const Alphabet& alphabet,
                             std::size_t bound);

// Lists every crossing pair among the presus.
BCCheckReport check_crossing_free(const std::vector<Presu>& presus);

// Unions classes whose key states are bounded-equivalent (middles up to
// mid_bound); the representative is the earliest member in declaration
// order. Completeness and crossing-freeness of the presu set are untouched.
PseudoBC merge_classes(const PseudoBC& p,
                       const LinearAutomaton& a,
                       std::size_t mid_bound,
                       std::size_t budget = kDefaultBudget);

// Number of nonempty classes.
std::size_t index_of(const PseudoBC& p);

} // namespace linaut
