#pragma once

#include <random>
#include <string>
#include <vector>

#include "linaut/automaton.hpp"

namespace testsupport {

// A complete deterministic automaton: every state gets one head and a target
// for every letter, acceptance by coin flip, s0 initial.
inline linaut::LinearAutomaton random_complete_automaton(std::mt19937& rng,
                                                         const linaut::Alphabet& alphabet,
                                                         int state_count) {
    std::vector<std::string> states;
    states.reserve(static_cast<std::size_t>(state_count));
    for (int i = 0; i < state_count; ++i)
        states.push_back("s" + std::to_string(i));

    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> pick(0, state_count - 1);
    std::vector<linaut::Transition> transitions;
    std::vector<std::string> accepting;
    for (const std::string& from : states) {
        linaut::Head head = coin(rng) == 0 ? linaut::Head::Left : linaut::Head::Right;
        for (char letter : alphabet.letters())
            transitions.push_back({from, head, letter, states[static_cast<std::size_t>(pick(rng))]});
        if (coin(rng) == 0)
            accepting.push_back(from);
    }
    return linaut::LinearAutomaton(alphabet, states, states[0], accepting, transitions);
}

// The sampling scheme shared by the property sweeps: states in [1, 6],
// alphabet a prefix of "abc" with 1 to 3 letters.
inline linaut::LinearAutomaton random_sweep_automaton(std::mt19937& rng) {
    std::uniform_int_distribution<int> state_count(1, 6);
    std::uniform_int_distribution<int> letter_count(1, 3);
    linaut::Alphabet alphabet(std::string_view("abc").substr(0, static_cast<std::size_t>(letter_count(rng))));
    return random_complete_automaton(rng, alphabet, state_count(rng));
}

} // namespace testsupport
