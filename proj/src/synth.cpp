#include "linaut/synth.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace linaut {

namespace {

std::string side_name(Head side) { return side == Head::Left ? "left" : "right"; }

const std::optional<std::map<char, ClassRef>>& side_of(const BCClass& c, Head side) {
    return side == Head::Left ? c.left : c.right;
}

} // namespace

ValidationReport validate_bc_spec(const BCSpec& spec) {
    ValidationReport report;

    std::map<std::string, const BCClass*> by_id;
    for (const BCClass& c : spec.classes) {
        if (c.id.empty()) {
            report.violations.push_back({"classes", "empty class id"});
            continue;
        }
        if (!by_id.emplace(c.id, &c).second)
            report.violations.push_back({c.id, "duplicate class id '" + c.id + "'"});
    }

    auto check_ref = [&](const std::string& subject, const std::string& where,
                         const ClassRef& ref) {
        auto it = by_id.find(ref.class_id);
        if (it == by_id.end()) {
            report.violations.push_back(
                {subject, where + " references unknown class '" + ref.class_id + "'"});
        } else if (!side_of(*it->second, ref.side)) {
            report.violations.push_back({subject, where + " references missing " +
                                                      side_name(ref.side) + " side of '" +
                                                      ref.class_id + "'"});
        }
    };

    for (const BCClass& c : spec.classes) {
        if (c.id.empty())
            continue;
        if (!c.left && !c.right) {
            report.violations.push_back({c.id, "class '" + c.id + "' has neither side"});
            continue;
        }
        for (Head side : {Head::Left, Head::Right}) {
            const auto& table = side_of(c, side);
            if (!table)
                continue;
            const std::string label = side_name(side) + " side of '" + c.id + "'";
            for (char letter : spec.alphabet.letters()) {
                if (!table->count(letter))
                    report.violations.push_back(
                        {c.id, label + " missing letter '" + std::string(1, letter) + "'"});
            }
            for (const auto& [letter, ref] : *table) {
                if (!spec.alphabet.contains(letter)) {
                    report.violations.push_back({c.id, label + " uses letter '" +
                                                           std::string(1, letter) +
                                                           "' outside the alphabet"});
                }
                check_ref(c.id, label + " at letter '" + std::string(1, letter) + "'", ref);
            }
        }
    }

    check_ref("initial", "initial", spec.initial);
    return report;
}

SynthesisResult build_automaton(const BCSpec& spec) {
    ValidationReport report = validate_bc_spec(spec);
    if (!report.ok())
        throw std::invalid_argument("build_automaton: " + report.violations.front().subject +
                                    ": " + report.violations.front().description);

    std::map<std::pair<std::string, Head>, std::string> state_of;
    std::vector<std::string> states;
    for (const BCClass& c : spec.classes) {
        if (c.left) {
            states.push_back("q_" + c.id);
            state_of[{c.id, Head::Left}] = states.back();
        }
        if (c.right) {
            states.push_back("p_" + c.id);
            state_of[{c.id, Head::Right}] = states.back();
        }
    }

    std::vector<std::string> accepting;
    for (const BCClass& c : spec.classes) {
        if (!c.accepting)
            continue;
        if (c.left)
            accepting.push_back(state_of.at({c.id, Head::Left}));
        if (c.right)
            accepting.push_back(state_of.at({c.id, Head::Right}));
    }

    std::vector<Transition> transitions;
    for (const BCClass& c : spec.classes) {
        for (Head side : {Head::Left, Head::Right}) {
            const auto& table = side_of(c, side);
            if (!table)
                continue;
            const std::string& from = state_of.at({c.id, side});
            for (char letter : spec.alphabet.letters()) {
                const ClassRef& ref = table->at(letter);
                transitions.push_back(
                    {from, side, letter, state_of.at({ref.class_id, ref.side})});
            }
        }
    }

    LinearAutomaton automaton(spec.alphabet, std::move(states),
                              state_of.at({spec.initial.class_id, spec.initial.side}),
                              std::move(accepting), std::move(transitions));
    return {std::move(automaton), std::move(state_of)};
}

BCSpec derive_bc_spec(const LinearAutomaton& a, std::size_t mid_bound, std::size_t budget) {
    const PseudoBC merged = merge_classes(enumerate_pseudo_bc(a, 0), a, mid_bound, budget);

    // Class id -> member state indices in declaration order.
    std::map<std::string, std::vector<int>> members;
    for (int s = 0; s < a.state_count(); ++s) {
        if (!a.reachable()[static_cast<std::size_t>(s)])
            continue;
        members[merged.class_of_state.at(a.state_name(s))].push_back(s);
    }

    BCSpec spec{a.alphabet(),
                {merged.class_of_state.at(a.initial()),
                 a.active_head(a.initial_index()).value()},
                {}};
    for (const std::string& id : merged.class_order) {
        BCClass c;
        c.id = id;
        c.accepting = a.is_accepting(members.at(id).front());
        for (Head side : {Head::Left, Head::Right}) {
            // The side is read off the first member that runs this head;
            // bounded equivalence makes later members agree up to merging.
            int member = -1;
            for (int s : members.at(id)) {
                if (a.active_head(s) == side) {
                    member = s;
                    break;
                }
            }
            if (member < 0)
                continue;
            std::map<char, ClassRef> table;
            for (int li = 0; li < a.alphabet().size(); ++li) {
                const int target = a.targets(member, side, li).front();
                table.emplace(a.alphabet().letter(li),
                              ClassRef{merged.class_of_state.at(a.state_name(target)),
                                       a.active_head(target).value()});
            }
            (side == Head::Left ? c.left : c.right) = std::move(table);
        }
        spec.classes.push_back(std::move(c));
    }
    return spec;
}

ValidationReport roundtrip_check(const LinearAutomaton& a,
                                 std::size_t bound,
                                 std::size_t mid_bound,
                                 std::size_t budget) {
    const BCSpec spec = derive_bc_spec(a, mid_bound, budget);
    ValidationReport spec_report = validate_bc_spec(spec);
    if (!spec_report.ok())
        return spec_report;

    const SynthesisResult built = build_automaton(spec);
    const EquivalenceVerdict verdict = equiv_bounded(a, built.automaton, bound);

    ValidationReport report;
    if (!verdict.equivalent_up_to)
        report.violations.push_back(
            {"roundtrip", "rebuilt automaton disagrees on '" + verdict.witness.value() + "'"});
    return report;
}

} // namespace linaut
