#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "linaut/json_io.hpp"
#include "linaut/synth.hpp"
#include "support/fixtures.hpp"

using namespace linaut;
using testsupport::fixture_automaton;
using testsupport::fixture_text;

namespace {

BCSpec tiny_spec() {
    // One class, both sides, alphabet {a}: accepts a* via the left side.
    BCSpec spec{Alphabet{std::string_view("a")}, ClassRef{"C", Head::Left}, {}};
    BCClass c;
    c.id = "C";
    c.accepting = true;
    c.left = std::map<char, ClassRef>{{'a', {"C", Head::Left}}};
    c.right = std::map<char, ClassRef>{{'a', {"C", Head::Right}}};
    spec.classes = {c};
    return spec;
}

} // namespace

TEST_SUITE("synth") {

TEST_CASE("a valid class structure passes validation") {
    BCSpec spec = parse_bc_spec(fixture_text("evenpal_spec.json"));
    CHECK(validate_bc_spec(spec).ok());
    CHECK(validate_bc_spec(tiny_spec()).ok());
}

TEST_CASE("validation pinpoints structural defects") {
    BCSpec spec = tiny_spec();
    spec.classes.push_back(spec.classes[0]);
    ValidationReport dup = validate_bc_spec(spec);
    REQUIRE_FALSE(dup.ok());
    CHECK(dup.violations[0].description == "duplicate class id 'C'");

    spec = tiny_spec();
    spec.classes[0].left.reset();
    spec.classes[0].right.reset();
    ValidationReport sideless = validate_bc_spec(spec);
    REQUIRE_FALSE(sideless.ok());
    CHECK(sideless.violations[0].description == "class 'C' has neither side");

    spec = tiny_spec();
    spec.alphabet = Alphabet{std::string_view("ab")};
    ValidationReport missing_letter = validate_bc_spec(spec);
    REQUIRE_FALSE(missing_letter.ok());
    CHECK(missing_letter.violations[0].description == "left side of 'C' missing letter 'b'");

    spec = tiny_spec();
    (*spec.classes[0].left)['a'] = {"D", Head::Left};
    ValidationReport unknown = validate_bc_spec(spec);
    REQUIRE_FALSE(unknown.ok());
    CHECK(unknown.violations[0].description ==
          "left side of 'C' at letter 'a' references unknown class 'D'");

    spec = tiny_spec();
    spec.classes[0].right.reset();
    (*spec.classes[0].left)['a'] = {"C", Head::Right};
    ValidationReport gone = validate_bc_spec(spec);
    REQUIRE_FALSE(gone.ok());
    CHECK(gone.violations[0].description ==
          "left side of 'C' at letter 'a' references missing right side of 'C'");

    spec = tiny_spec();
    spec.initial = {"X", Head::Left};
    ValidationReport bad_initial = validate_bc_spec(spec);
    REQUIRE_FALSE(bad_initial.ok());
    CHECK(bad_initial.violations[0].subject == "initial");

    CHECK_THROWS_AS(build_automaton(spec), std::invalid_argument);
}

TEST_CASE("synthesis yields one state per side with shared acceptance") {
    SynthesisResult r = build_automaton(parse_bc_spec(fixture_text("evenpal_spec.json")));
    const LinearAutomaton& a = r.automaton;
    CHECK(a.state_count() == 10);
    CHECK(a.deterministic());
    CHECK(a.complete());
    CHECK(a.initial() == "q_C1");
    CHECK(r.state_of.at({"C1", Head::Left}) == "q_C1");
    CHECK(r.state_of.at({"C1", Head::Right}) == "p_C1");
    CHECK(r.state_of.at({"C2", Head::Right}) == "p_C2");
    CHECK(r.state_of.count({"C2", Head::Left}) == 0);
    CHECK(a.accepting() == std::vector<std::string>{"q_C1", "p_C1", "p_C5"});
    CHECK(a.active_head(a.state_index("q_C3")) == Head::Left);
    CHECK(a.active_head(a.state_index("p_C4")) == Head::Right);

    // The rebuilt machine accepts the same bounded language as the original.
    LinearAutomaton evenpal = fixture_automaton("evenpal.json");
    EquivalenceVerdict v = equiv_bounded(a, evenpal, 8);
    CHECK(v.equivalent_up_to);
}

TEST_CASE("derivation reads the class structure back off a machine") {
    LinearAutomaton pal3 = fixture_automaton("pal3.json");
    BCSpec spec = derive_bc_spec(pal3, 2);
    CHECK(spec.classes.size() == 5);
    CHECK(spec.initial == ClassRef{"q0", Head::Left});
    const BCClass& c0 = spec.classes[0];
    CHECK(c0.id == "q0");
    CHECK(c0.accepting);
    REQUIRE(c0.left.has_value());
    CHECK_FALSE(c0.right.has_value());
    CHECK(c0.left->at('a') == ClassRef{"q1", Head::Right});
    CHECK(c0.left->at('b') == ClassRef{"q2", Head::Right});

    // Deriving with merging: the even-palindrome machine folds to 8 classes,
    // two of them two-sided.
    LinearAutomaton evenpal = fixture_automaton("evenpal.json");
    BCSpec folded = derive_bc_spec(evenpal, 6);
    CHECK(folded.classes.size() == 8);
    int two_sided = 0;
    for (const BCClass& c : folded.classes)
        if (c.left.has_value() && c.right.has_value())
            ++two_sided;
    CHECK(two_sided == 2);
    SynthesisResult rebuilt = build_automaton(folded);
    CHECK(rebuilt.automaton.state_count() == 10);
    CHECK(equiv_bounded(rebuilt.automaton, evenpal, 8).equivalent_up_to);
}

TEST_CASE("derive-build round trips are bounded-language faithful") {
    CHECK(roundtrip_check(fixture_automaton("pal3.json"), 8, 4).ok());
    CHECK(roundtrip_check(fixture_automaton("evenpal.json"), 8, 6).ok());
    CHECK(roundtrip_check(fixture_automaton("three_rate_completed.json"), 12, 6).ok());
    CHECK(roundtrip_check(fixture_automaton("rate3_canonical.json"), 12, 6).ok());
}

} // TEST_SUITE("synth")
