#include "linaut/run.hpp"

#include <stdexcept>

namespace linaut {

bool PresuLengthLex::operator()(const Presu& lhs, const Presu& rhs) const {
    if (lhs.total_length() != rhs.total_length()) {
        return lhs.total_length() < rhs.total_length();
    }
    if (lhs.prefix != rhs.prefix) {
        return alphabet->word_less(lhs.prefix, rhs.prefix);
    }
    return alphabet->word_less(lhs.suffix, rhs.suffix);
}

std::vector<Head> RunTrace::head_sequence() const {
    std::vector<Head> heads;
    heads.reserve(steps.size());
    for (const RunStep& s : steps) {
        heads.push_back(s.head);
    }
    return heads;
}

std::vector<StepOption> step(const LinearAutomaton& a,
                             const Configuration& c,
                             std::string_view input) {
    int state = a.state_index(c.state);
    if (state < 0) {
        throw std::invalid_argument("step: unknown state '" + c.state + "'");
    }
    if (c.lo > c.hi || c.hi > input.size()) {
        throw std::invalid_argument("step: configuration out of bounds");
    }

    std::vector<StepOption> options;
    if (c.lo == c.hi) {
        return options;
    }
    char left_letter = input[c.lo];
    for (int t : a.targets(state, Head::Left, a.alphabet().index_of(left_letter))) {
        options.push_back({{a.state_name(t), c.lo + 1, c.hi}, Head::Left, left_letter});
    }
    char right_letter = input[c.hi - 1];
    for (int t : a.targets(state, Head::Right, a.alphabet().index_of(right_letter))) {
        options.push_back({{a.state_name(t), c.lo, c.hi - 1}, Head::Right, right_letter});
    }
    return options;
}

RunTrace run_from(const LinearAutomaton& a, const std::string& start_state, std::string_view word) {
    if (!a.deterministic()) {
        throw std::invalid_argument("run: automaton is not deterministic");
    }
    int state = a.state_index(start_state);
    if (state < 0) {
        throw std::invalid_argument("run: unknown state '" + start_state + "'");
    }
    for (char c : word) {
        if (!a.alphabet().contains(c)) {
            throw std::invalid_argument(std::string("run: foreign letter '") + c + "' in word");
        }
    }

    RunTrace trace;
    trace.input.assign(word.begin(), word.end());
    std::size_t lo = 0;
    std::size_t hi = word.size();
    while (lo < hi) {
        std::optional<Head> head = a.active_head(state);
        if (!head) {
            break;
        }
        char letter = *head == Head::Left ? word[lo] : word[hi - 1];
        const std::vector<int>& targets = a.targets(state, *head, a.alphabet().index_of(letter));
        if (targets.empty()) {
            break;
        }
        int next = targets.front();
        trace.steps.push_back({a.state_name(state), *head, letter, a.state_name(next)});
        if (*head == Head::Left) {
            ++lo;
        } else {
            --hi;
        }
        state = next;
    }

    trace.final_state = a.state_name(state);
    trace.lo = lo;
    trace.hi = hi;
    trace.completed = lo == hi;
    trace.accepted = trace.completed && a.is_accepting(state);
    trace.split.prefix = trace.input.substr(0, lo);
    trace.split.suffix = trace.input.substr(hi);
    return trace;
}

RunTrace run(const LinearAutomaton& a, std::string_view word) {
    return run_from(a, a.initial(), word);
}

Presu unique_split(const LinearAutomaton& a, std::string_view word) {
    if (!a.deterministic()) {
        throw std::invalid_argument("unique_split: automaton is not deterministic");
    }
    if (!a.complete_on_reachable()) {
        throw std::invalid_argument("unique_split: automaton is not complete on reachable states");
    }
    return run(a, word).split;
}

ValidationReport check_prefix_stability(const LinearAutomaton& a,
                                        std::string_view word,
                                        const std::vector<std::string>& middles) {
    if (!a.deterministic()) {
        throw std::invalid_argument("check_prefix_stability: automaton is not deterministic");
    }
    if (!a.complete_on_reachable()) {
        throw std::invalid_argument(
            "check_prefix_stability: automaton is not complete on reachable states");
    }

    RunTrace base = run(a, word);
    const std::string& prefix = base.split.prefix;
    const std::string& suffix = base.split.suffix;

    ValidationReport report;
    for (const std::string& middle : middles) {
        std::string extended = prefix + middle + suffix;
        RunTrace trace = run(a, extended);
        if (trace.steps.size() < base.steps.size()) {
            report.violations.push_back(
                {middle, "run stopped after " + std::to_string(trace.steps.size()) + " of " +
                             std::to_string(base.steps.size()) + " steps"});
            continue;
        }
        // After |word| steps exactly the original ends must be consumed and
        // the original final state reached.
        std::size_t left_reads = 0;
        for (std::size_t i = 0; i < base.steps.size(); ++i) {
            if (trace.steps[i].head == Head::Left) {
                ++left_reads;
            }
        }
        std::size_t right_reads = base.steps.size() - left_reads;
        std::string state_after =
            base.steps.empty() ? a.initial() : trace.steps[base.steps.size() - 1].to;
        bool ends_match = left_reads == prefix.size() && right_reads == suffix.size() &&
                          extended.compare(0, left_reads, prefix) == 0 &&
                          extended.compare(extended.size() - right_reads, right_reads, suffix) == 0;
        if (!ends_match) {
            report.violations.push_back(
                {middle, "consumed ends differ from (" + prefix + ", " + suffix + ")"});
        } else if (state_after != base.final_state) {
            report.violations.push_back(
                {middle, "reached " + state_after + " instead of " + base.final_state});
        }
    }
    return report;
}

} // namespace linaut
