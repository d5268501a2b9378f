#include "linaut/border.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "oracle_internal.hpp"

namespace linaut {

namespace {

struct WorkItem {
    Presu presu;
    int state;
};

bool proper_prefix(const std::string& short_word, const std::string& long_word) {
    return short_word.size() < long_word.size() &&
           long_word.compare(0, short_word.size(), short_word) == 0;
}

bool proper_suffix(const std::string& short_word, const std::string& long_word) {
    return short_word.size() < long_word.size() &&
           long_word.compare(long_word.size() - short_word.size(), short_word.size(),
                             short_word) == 0;
}

} // namespace

PseudoBC enumerate_pseudo_bc(const LinearAutomaton& a, std::size_t bound) {
    if (!a.deterministic()) {
        throw std::invalid_argument("enumerate_pseudo_bc: automaton is not deterministic");
    }
    if (!a.complete_on_reachable()) {
        throw std::invalid_argument(
            "enumerate_pseudo_bc: automaton is not complete on reachable states");
    }

    PseudoBC result;
    result.bound = bound;
    for (int s = 0; s < a.state_count(); ++s) {
        if (a.reachable()[static_cast<std::size_t>(s)]) {
            result.class_order.push_back(a.state_name(s));
            result.classes[a.state_name(s)] = {};
            result.class_of_state[a.state_name(s)] = a.state_name(s);
        }
    }

    std::vector<WorkItem> level{{Presu{}, a.initial_index()}};
    result.assignment[Presu{}] = a.initial();
    result.classes[a.initial()].push_back(Presu{});

    for (std::size_t total = 0; total < bound; ++total) {
        std::vector<WorkItem> next_level;
        next_level.reserve(level.size() * static_cast<std::size_t>(a.alphabet().size()));
        for (const WorkItem& item : level) {
            Head head = a.active_head(item.state).value();
            for (int l = 0; l < a.alphabet().size(); ++l) {
                int target = a.targets(item.state, head, l).front();
                Presu child = item.presu;
                if (head == Head::Left) {
                    child.prefix += a.alphabet().letter(l);
                } else {
                    child.suffix.insert(child.suffix.begin(), a.alphabet().letter(l));
                }
                if (!result.assignment.emplace(child, a.state_name(target)).second) {
                    throw std::logic_error("enumerate_pseudo_bc: presu generated twice");
                }
                result.classes[a.state_name(target)].push_back(child);
                next_level.push_back({std::move(child), target});
            }
        }
        level = std::move(next_level);
    }

    PresuLengthLex less{&a.alphabet()};
    for (auto& [id, presus] : result.classes) {
        std::sort(presus.begin(), presus.end(), less);
    }
    return result;
}

BCCheckReport check_complete(const std::vector<Presu>& presus,
                             const Alphabet& alphabet,
                             std::size_t bound) {
    std::set<Presu> unique(presus.begin(), presus.end());
    std::map<std::string, std::vector<Presu>> by_word;
    for (const Presu& presu : unique) {
        if (presu.total_length() <= bound) {
            by_word[presu.prefix + presu.suffix].push_back(presu);
        }
    }
    PresuLengthLex less{&alphabet};
    for (auto& [word, matches] : by_word) {
        std::sort(matches.begin(), matches.end(), less);
    }

    BCCheckReport report;
    WordEnumerator words(alphabet, bound);
    while (std::optional<std::string> word = words.next()) {
        auto it = by_word.find(*word);
        std::size_t matches = it == by_word.end() ? 0 : it->second.size();
        if (matches != 1) {
            report.missing_or_duplicated.emplace_back(
                *word, matches == 0 ? std::vector<Presu>{} : it->second);
        }
    }
    report.complete_up_to = report.missing_or_duplicated.empty();
    return report;
}

BCCheckReport check_crossing_free(const std::vector<Presu>& presus) {
    std::set<Presu> unique(presus.begin(), presus.end());
    std::vector<Presu> sorted(unique.begin(), unique.end());

    BCCheckReport report;
    for (const Presu& p : sorted) {
        for (const Presu& q : sorted) {
            if (proper_prefix(p.prefix, q.prefix) && proper_suffix(q.suffix, p.suffix)) {
                report.crossing_pairs.emplace_back(p, q);
            }
        }
    }
    return report;
}

PseudoBC merge_classes(const PseudoBC& p,
                       const LinearAutomaton& a,
                       std::size_t mid_bound,
                       std::size_t budget) {
    if (!a.deterministic() || !a.complete_on_reachable()) {
        throw std::invalid_argument(
            "merge_classes: automaton is not deterministic and complete on reachable states");
    }
    for (const std::string& state : p.class_order) {
        if (a.state_index(state) < 0) {
            throw std::invalid_argument("merge_classes: state '" + state +
                                        "' is not a state of the automaton");
        }
    }

    // Union-find keyed by position in class_order; the earliest member in
    // declaration order stays the representative. Bounded equivalence is
    // transitive, so merging pairwise is sound.
    std::vector<std::size_t> root(p.class_order.size());
    for (std::size_t i = 0; i < root.size(); ++i) {
        root[i] = i;
    }
    auto find = [&root](std::size_t i) {
        while (root[i] != i) {
            i = root[i];
        }
        return i;
    };

    detail::BudgetCounter counter{0, budget, "merge_classes"};
    for (std::size_t i = 0; i < root.size(); ++i) {
        for (std::size_t j = i + 1; j < root.size(); ++j) {
            if (find(i) == find(j)) {
                continue;
            }
            EquivalenceVerdict verdict = detail::state_equiv_counted(
                a, p.class_order[i], p.class_order[j], mid_bound, counter);
            if (verdict.equivalent_up_to) {
                root[find(j)] = find(i);
            }
        }
    }

    PseudoBC merged;
    merged.bound = p.bound;
    merged.merged_mid_bound = mid_bound;
    for (std::size_t i = 0; i < root.size(); ++i) {
        const std::string& representative = p.class_order[find(i)];
        const std::string& state = p.class_order[i];
        if (find(i) == i) {
            merged.class_order.push_back(state);
            merged.classes[state] = {};
        }
        merged.class_of_state[state] = representative;
    }
    for (const auto& [state, presus] : p.classes) {
        std::vector<Presu>& bucket = merged.classes[merged.class_of_state.at(state)];
        bucket.insert(bucket.end(), presus.begin(), presus.end());
    }
    for (const auto& [presu, id] : p.assignment) {
        merged.assignment[presu] = merged.class_of_state.at(id);
    }

    PresuLengthLex less{&a.alphabet()};
    for (auto& [id, presus] : merged.classes) {
        std::sort(presus.begin(), presus.end(), less);
    }
    return merged;
}

std::size_t index_of(const PseudoBC& p) {
    std::size_t count = 0;
    for (const auto& [id, presus] : p.classes) {
        if (!presus.empty()) {
            ++count;
        }
    }
    return count;
}

} // namespace linaut
