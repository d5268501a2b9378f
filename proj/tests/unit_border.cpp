#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "linaut/border.hpp"
#include "linaut/json_io.hpp"
#include "support/fixtures.hpp"

using namespace linaut;
using testsupport::fixture_automaton;
using testsupport::fixture_text;

TEST_SUITE("border") {

TEST_CASE("bound zero assigns only the empty presu to the initial class") {
    LinearAutomaton pal3 = fixture_automaton("pal3.json");
    PseudoBC p = enumerate_pseudo_bc(pal3, 0);
    CHECK(p.bound == 0);
    CHECK_FALSE(p.merged_mid_bound.has_value());
    CHECK(p.assignment.size() == 1);
    CHECK(p.assignment.at(Presu{"", ""}) == "q0");
    CHECK(index_of(p) == 1);
}

TEST_CASE("breadth-first sweep extends presus on the active head's side") {
    LinearAutomaton pal3 = fixture_automaton("pal3.json");
    PseudoBC p = enumerate_pseudo_bc(pal3, 2);
    CHECK(p.class_order == std::vector<std::string>{"q0", "q1", "q2", "q3", "q4"});
    CHECK(p.class_of_state.at("q3") == "q3");
    CHECK(p.assignment.at(Presu{"", ""}) == "q0");
    CHECK(p.assignment.at(Presu{"a", ""}) == "q1");
    CHECK(p.assignment.at(Presu{"b", ""}) == "q2");
    CHECK(p.assignment.at(Presu{"c", ""}) == "q3");
    CHECK(p.assignment.at(Presu{"a", "a"}) == "q0");
    CHECK(p.assignment.at(Presu{"a", "b"}) == "q4");
    CHECK(p.classes.at("q0") == std::vector<Presu>{{"", ""}, {"a", "a"}, {"b", "b"}, {"c", "c"}});
    // The right head inserts at the front of the suffix, never the back.
    CHECK(p.assignment.count(Presu{"ab", ""}) == 0);
}

TEST_CASE("the right head grows the suffix front on the three-rate machine") {
    LinearAutomaton three_rate = fixture_automaton("three_rate.json");
    PseudoBC p = enumerate_pseudo_bc(three_rate, 4);
    CHECK(p.assignment.at(Presu{"", ""}) == "q1");
    CHECK(p.assignment.at(Presu{"1", ""}) == "p2");
    CHECK(p.assignment.at(Presu{"1", "0"}) == "p3");
    CHECK(p.assignment.at(Presu{"1", "00"}) == "p4");
    CHECK(p.assignment.at(Presu{"1", "000"}) == "p1");
    // Unreachable states contribute no classes.
    CHECK(p.classes.count("q2") == 0);
    CHECK(p.class_of_state.count("q2") == 0);
}

TEST_CASE("every assigned presu is the split the automaton produces") {
    LinearAutomaton pal3 = fixture_automaton("pal3.json");
    PseudoBC p = enumerate_pseudo_bc(pal3, 4);
    for (const auto& [presu, class_id] : p.assignment) {
        RunTrace t = run(pal3, presu.prefix + presu.suffix);
        CHECK(t.split == presu);
        CHECK(class_id == t.final_state);
    }
}

TEST_CASE("the palindrome machine needs all five classes") {
    LinearAutomaton pal3 = fixture_automaton("pal3.json");
    CHECK(index_of(enumerate_pseudo_bc(pal3, 6)) == 5);
}

TEST_CASE("enumeration requires determinism and reachable completeness") {
    Alphabet ab{std::string_view("ab")};
    LinearAutomaton gappy(ab, {"A", "B"}, "A", {},
                          {{"A", Head::Left, 'a', "B"}, {"A", Head::Left, 'b', "B"}});
    CHECK_THROWS_AS(enumerate_pseudo_bc(gappy, 2), std::invalid_argument);

    LinearAutomaton nondet(ab, {"A"}, "A", {},
                           {{"A", Head::Left, 'a', "A"}, {"A", Head::Right, 'b', "A"}});
    CHECK_THROWS_AS(enumerate_pseudo_bc(nondet, 2), std::invalid_argument);
}

TEST_CASE("completeness check finds missing and multiply covered words") {
    Alphabet ab{std::string_view("ab")};
    std::vector<Presu> omega1 = parse_presus(fixture_text("omega1.json"));
    REQUIRE(omega1.size() == 5);
    BCCheckReport r1 = check_complete(omega1, ab, 4);
    CHECK_FALSE(r1.complete_up_to);
    bool aaab_missing = false;
    for (const auto& [word, matches] : r1.missing_or_duplicated)
        if (word == "aaab" && matches.empty())
            aaab_missing = true;
    CHECK(aaab_missing);
    // The five member words a^n are each covered exactly once.
    for (const auto& [word, matches] : r1.missing_or_duplicated)
        CHECK(word.find('b') != std::string::npos);

    std::vector<Presu> omega2 = parse_presus(fixture_text("omega2.json"));
    REQUIRE(omega2.size() == 55);
    BCCheckReport r2 = check_complete(omega2, ab, 4);
    CHECK_FALSE(r2.complete_up_to);
    bool ab_doubled = false;
    for (const auto& [word, matches] : r2.missing_or_duplicated)
        if (word == "ab") {
            ab_doubled = matches.size() >= 2;
            CHECK(matches == std::vector<Presu>{{"", "ab"}, {"a", "b"}, {"ab", ""}});
        }
    CHECK(ab_doubled);
}

TEST_CASE("a complete machine's presus cover every word exactly once") {
    LinearAutomaton pal3 = fixture_automaton("pal3.json");
    PseudoBC p = enumerate_pseudo_bc(pal3, 3);
    std::vector<Presu> presus;
    for (const auto& [presu, class_id] : p.assignment)
        presus.push_back(presu);
    BCCheckReport r = check_complete(presus, pal3.alphabet(), 3);
    CHECK(r.complete_up_to);
    CHECK(r.missing_or_duplicated.empty());
    CHECK(check_crossing_free(presus).ok());
}

TEST_CASE("crossing pairs are reported with the shorter prefix first") {
    std::vector<Presu> omega1 = parse_presus(fixture_text("omega1.json"));
    CHECK(check_crossing_free(omega1).crossing_pairs.empty());

    std::vector<Presu> omega2 = parse_presus(fixture_text("omega2.json"));
    BCCheckReport r = check_crossing_free(omega2);
    CHECK_FALSE(r.ok());
    bool found = false;
    for (const auto& [first, second] : r.crossing_pairs)
        if (first == Presu{"a", "abb"} && second == Presu{"aaa", "b"})
            found = true;
    CHECK(found);
    for (const auto& [first, second] : r.crossing_pairs) {
        CHECK(second.prefix.size() > first.prefix.size());
        CHECK(second.prefix.substr(0, first.prefix.size()) == first.prefix);
        CHECK(first.suffix.size() > second.suffix.size());
        CHECK(first.suffix.substr(first.suffix.size() - second.suffix.size()) == second.suffix);
    }
}

TEST_CASE("merging unions bounded-equivalent classes under the earliest name") {
    LinearAutomaton evenpal = fixture_automaton("evenpal.json");
    PseudoBC p = enumerate_pseudo_bc(evenpal, 5);
    CHECK(index_of(p) == 10);

    PseudoBC merged = merge_classes(p, evenpal, 6);
    CHECK(merged.merged_mid_bound == 6);
    CHECK(index_of(merged) == 8);
    CHECK(merged.class_of_state.at("p1") == "q1");
    CHECK(merged.class_of_state.at("q1") == "q1");
    CHECK(merged.class_of_state.at("p3") == "q3");
    CHECK(merged.classes.count("p1") == 0);
    // Merged members keep length-lex order.
    const std::vector<Presu>& members = merged.classes.at("q1");
    PresuLengthLex less{&evenpal.alphabet()};
    for (std::size_t i = 1; i < members.size(); ++i)
        CHECK_FALSE(less(members[i], members[i - 1]));
    // The assignment moves to the merged class ids.
    CHECK(merged.assignment.at(Presu{"", ""}) == "q1");

    LinearAutomaton pal3 = fixture_automaton("pal3.json");
    PseudoBC p3 = enumerate_pseudo_bc(pal3, 4);
    PseudoBC merged3 = merge_classes(p3, pal3, 4);
    CHECK(index_of(merged3) == 5);
    CHECK(merged3.classes == p3.classes);
}

TEST_CASE("merging respects the membership-test budget") {
    LinearAutomaton pal3 = fixture_automaton("pal3.json");
    PseudoBC p = enumerate_pseudo_bc(pal3, 2);
    CHECK_THROWS_AS(merge_classes(p, pal3, 3, 1), BudgetExceeded);
}

} // TEST_SUITE("border")
