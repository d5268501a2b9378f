#include "linaut/automaton.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace linaut {

namespace {

std::string quoted(char c) { return std::string("'") + c + "'"; }

} // namespace

LinearAutomaton::LinearAutomaton(Alphabet alphabet,
                                 std::vector<std::string> states,
                                 std::string initial,
                                 std::vector<std::string> accepting,
                                 std::vector<Transition> transitions)
    : alphabet_(std::move(alphabet)), state_names_(std::move(states)) {
    if (state_names_.empty()) {
        throw std::invalid_argument("automaton needs at least one state");
    }
    for (std::size_t i = 0; i < state_names_.size(); ++i) {
        const std::string& name = state_names_[i];
        if (name.empty()) {
            throw std::invalid_argument("state names must not be empty");
        }
        if (!state_index_.emplace(name, static_cast<int>(i)).second) {
            throw std::invalid_argument("duplicate state '" + name + "'");
        }
    }

    initial_ = state_index(initial);
    if (initial_ < 0) {
        throw std::invalid_argument("initial state '" + initial + "' is not a declared state");
    }

    accepting_.assign(state_names_.size(), false);
    for (const std::string& name : accepting) {
        int idx = state_index(name);
        if (idx < 0) {
            throw std::invalid_argument("accepting state '" + name + "' is not a declared state");
        }
        if (accepting_[static_cast<std::size_t>(idx)]) {
            throw std::invalid_argument("duplicate accepting state '" + name + "'");
        }
        accepting_[static_cast<std::size_t>(idx)] = true;
    }

    delta_.assign(state_names_.size() * 2 * static_cast<std::size_t>(alphabet_.size()), {});
    for (const Transition& t : transitions) {
        int from = state_index(t.from);
        if (from < 0) {
            throw std::invalid_argument("transition from unknown state '" + t.from + "'");
        }
        int to = state_index(t.to);
        if (to < 0) {
            throw std::invalid_argument("transition to unknown state '" + t.to + "'");
        }
        int letter = alphabet_.index_of(t.letter);
        if (letter < 0) {
            throw std::invalid_argument("transition on foreign letter " + quoted(t.letter));
        }
        std::vector<int>& bucket = delta_[slot(from, t.head, letter)];
        if (std::find(bucket.begin(), bucket.end(), to) != bucket.end()) {
            throw std::invalid_argument("duplicate transition (" + t.from + ", " +
                                        head_char(t.head) + (", ") + quoted(t.letter) + ", " +
                                        t.to + ")");
        }
        bucket.push_back(to);
    }
    for (std::vector<int>& bucket : delta_) {
        std::sort(bucket.begin(), bucket.end());
    }

    // Determinism shape and active heads.
    deterministic_ = true;
    active_head_.assign(state_names_.size(), std::nullopt);
    for (int s = 0; s < state_count(); ++s) {
        bool left = has_any(s, Head::Left);
        bool right = has_any(s, Head::Right);
        if (left && right) {
            deterministic_ = false;
        } else if (left) {
            active_head_[static_cast<std::size_t>(s)] = Head::Left;
        } else if (right) {
            active_head_[static_cast<std::size_t>(s)] = Head::Right;
        }
        for (Head h : {Head::Left, Head::Right}) {
            for (int l = 0; l < alphabet_.size(); ++l) {
                if (delta_[slot(s, h, l)].size() > 1) {
                    deterministic_ = false;
                }
            }
        }
    }

    // Reachability closure over all targets of both heads.
    reachable_.assign(state_names_.size(), false);
    std::deque<int> queue{initial_};
    reachable_[static_cast<std::size_t>(initial_)] = true;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (Head h : {Head::Left, Head::Right}) {
            for (int l = 0; l < alphabet_.size(); ++l) {
                for (int t : delta_[slot(s, h, l)]) {
                    if (!reachable_[static_cast<std::size_t>(t)]) {
                        reachable_[static_cast<std::size_t>(t)] = true;
                        queue.push_back(t);
                    }
                }
            }
        }
    }

    complete_ = deterministic_;
    complete_on_reachable_ = deterministic_;
    if (deterministic_) {
        for (int s = 0; s < state_count(); ++s) {
            std::optional<Head> head = active_head_[static_cast<std::size_t>(s)];
            bool covered = head.has_value();
            if (covered) {
                for (int l = 0; l < alphabet_.size(); ++l) {
                    if (delta_[slot(s, *head, l)].empty()) {
                        covered = false;
                        break;
                    }
                }
            }
            if (!covered) {
                complete_ = false;
                if (reachable_[static_cast<std::size_t>(s)]) {
                    complete_on_reachable_ = false;
                }
            }
        }
    }
}

int LinearAutomaton::state_index(const std::string& name) const {
    auto it = state_index_.find(name);
    return it == state_index_.end() ? -1 : it->second;
}

std::vector<std::string> LinearAutomaton::accepting() const {
    std::vector<std::string> names;
    for (int s = 0; s < state_count(); ++s) {
        if (accepting_[static_cast<std::size_t>(s)]) {
            names.push_back(state_name(s));
        }
    }
    return names;
}

bool LinearAutomaton::is_accepting(const std::string& name) const {
    int idx = state_index(name);
    return idx >= 0 && is_accepting(idx);
}

const std::vector<int>& LinearAutomaton::targets(int state, Head head, int letter_index) const {
    if (letter_index < 0 || letter_index >= alphabet_.size()) {
        return empty_targets_;
    }
    return delta_[slot(state, head, letter_index)];
}

bool LinearAutomaton::has_any(int state, Head head) const {
    for (int l = 0; l < alphabet_.size(); ++l) {
        if (!delta_[slot(state, head, l)].empty()) {
            return true;
        }
    }
    return false;
}

std::vector<Transition> LinearAutomaton::canonical_transitions() const {
    std::vector<Transition> out;
    for (int s = 0; s < state_count(); ++s) {
        for (Head h : {Head::Left, Head::Right}) {
            for (int l = 0; l < alphabet_.size(); ++l) {
                for (int t : delta_[slot(s, h, l)]) {
                    out.push_back({state_name(s), h, alphabet_.letter(l), state_name(t)});
                }
            }
        }
    }
    return out;
}

bool operator==(const LinearAutomaton& lhs, const LinearAutomaton& rhs) {
    return lhs.alphabet_ == rhs.alphabet_ && lhs.state_names_ == rhs.state_names_ &&
           lhs.initial_ == rhs.initial_ && lhs.accepting_ == rhs.accepting_ &&
           lhs.delta_ == rhs.delta_;
}

ValidationReport validate_deterministic(const LinearAutomaton& a) {
    ValidationReport report;
    for (int s = 0; s < a.state_count(); ++s) {
        if (a.has_any(s, Head::Left) && a.has_any(s, Head::Right)) {
            report.violations.push_back({a.state_name(s), "both heads active"});
        }
        for (Head h : {Head::Left, Head::Right}) {
            for (int l = 0; l < a.alphabet().size(); ++l) {
                const std::vector<int>& targets = a.targets(s, h, l);
                if (targets.size() > 1) {
                    std::string description = "multiple targets for (";
                    description += head_char(h);
                    description += ", '";
                    description += a.alphabet().letter(l);
                    description += "'):";
                    for (int t : targets) {
                        description += " " + a.state_name(t);
                    }
                    report.violations.push_back({a.state_name(s), description});
                }
            }
        }
    }
    return report;
}

ValidationReport validate_complete(const LinearAutomaton& a, bool reachable_only) {
    if (!a.deterministic()) {
        throw std::invalid_argument("validate_complete: automaton is not deterministic");
    }
    ValidationReport report;
    for (int s = 0; s < a.state_count(); ++s) {
        if (reachable_only && !a.reachable()[static_cast<std::size_t>(s)]) {
            continue;
        }
        std::optional<Head> head = a.active_head(s);
        if (!head) {
            report.violations.push_back({a.state_name(s), "no transitions for either head"});
            continue;
        }
        for (int l = 0; l < a.alphabet().size(); ++l) {
            if (a.targets(s, *head, l).empty()) {
                std::string description = "missing transition for (";
                description += head_char(*head);
                description += ", '";
                description += a.alphabet().letter(l);
                description += "')";
                report.violations.push_back({a.state_name(s), description});
            }
        }
    }
    return report;
}

std::vector<std::string> reachable_states(const LinearAutomaton& a) {
    std::vector<std::string> names;
    for (int s = 0; s < a.state_count(); ++s) {
        if (a.reachable()[static_cast<std::size_t>(s)]) {
            names.push_back(a.state_name(s));
        }
    }
    return names;
}

LinearAutomaton complete_with_sink(const LinearAutomaton& a) {
    if (!a.deterministic()) {
        throw std::invalid_argument("complete_with_sink: automaton is not deterministic");
    }
    if (a.complete()) {
        return a;
    }

    std::string sink = "sink";
    for (int k = 1; a.state_index(sink) >= 0; ++k) {
        sink = "sink" + std::to_string(k);
    }

    std::vector<std::string> states = a.states();
    states.push_back(sink);

    std::vector<Transition> transitions = a.canonical_transitions();
    for (int s = 0; s < a.state_count(); ++s) {
        Head head = a.active_head(s).value_or(Head::Left);
        for (int l = 0; l < a.alphabet().size(); ++l) {
            if (a.targets(s, head, l).empty()) {
                transitions.push_back({a.state_name(s), head, a.alphabet().letter(l), sink});
            }
        }
    }
    for (int l = 0; l < a.alphabet().size(); ++l) {
        transitions.push_back({sink, Head::Left, a.alphabet().letter(l), sink});
    }

    return LinearAutomaton(a.alphabet(), std::move(states), a.initial(), a.accepting(),
                           std::move(transitions));
}

LinearAutomaton complement(const LinearAutomaton& a) {
    if (!a.deterministic()) {
        throw std::invalid_argument("complement: automaton is not deterministic");
    }
    if (!a.complete()) {
        throw std::invalid_argument("complement: automaton is not complete");
    }
    std::vector<std::string> accepting;
    for (int s = 0; s < a.state_count(); ++s) {
        if (!a.is_accepting(s)) {
            accepting.push_back(a.state_name(s));
        }
    }
    return LinearAutomaton(a.alphabet(), a.states(), a.initial(), std::move(accepting),
                           a.canonical_transitions());
}

} // namespace linaut
