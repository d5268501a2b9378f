#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "linaut/oracle.hpp"
#include "support/fixtures.hpp"

using namespace linaut;
using testsupport::fixture_automaton;

TEST_SUITE("oracle") {

TEST_CASE("builtin languages answer membership") {
    CHECK(builtin_language_names() ==
          std::vector<std::string>{"palindromes", "even-palindromes", "1n03n", "anbncn",
                                   "sigma-star", "empty"});

    LanguagePredicate pal = builtin_language("palindromes");
    CHECK(pal.member("aba"));
    CHECK(pal.member(""));
    CHECK_FALSE(pal.member("ab"));

    LanguagePredicate evenpal = builtin_language("even-palindromes");
    CHECK(evenpal.member("abba"));
    CHECK_FALSE(evenpal.member("aba"));

    LanguagePredicate three = builtin_language("1n03n");
    CHECK(three.member(""));
    CHECK(three.member("1000"));
    CHECK(three.member("11000000"));
    CHECK_FALSE(three.member("100"));
    CHECK_FALSE(three.member("0001"));

    LanguagePredicate abc = builtin_language("anbncn");
    CHECK(abc.member("abc"));
    CHECK(abc.member("aabbcc"));
    CHECK_FALSE(abc.member("aabc"));

    CHECK(builtin_language("sigma-star").member("bbb"));
    CHECK_FALSE(builtin_language("empty").member(""));
}

TEST_CASE("structure-generic languages take an alphabet, fixed ones refuse") {
    Alphabet xy{std::string_view("xy")};
    LanguagePredicate pal = builtin_language("palindromes", xy);
    CHECK(pal.alphabet == xy);
    CHECK(pal.member("xyx"));

    CHECK_THROWS_AS(builtin_language("1n03n", xy), std::invalid_argument);
    CHECK_THROWS_AS(builtin_language("anbncn", xy), std::invalid_argument);
    CHECK_THROWS_AS(builtin_language("no-such-language"), std::invalid_argument);
}

TEST_CASE("language_of wraps a deterministic machine as a predicate") {
    LinearAutomaton pal3 = fixture_automaton("pal3.json");
    LanguagePredicate lang = language_of(pal3, "pal3");
    CHECK(lang.name == "pal3");
    CHECK(lang.alphabet == pal3.alphabet());
    CHECK(lang.member("abcba"));
    CHECK_FALSE(lang.member("abc"));
}

TEST_CASE("word enumeration is length-lexicographic from the empty word") {
    Alphabet ab{std::string_view("ab")};
    WordEnumerator it(ab, 2);
    std::vector<std::string> words;
    while (auto w = it.next())
        words.push_back(*w);
    CHECK(words == std::vector<std::string>{"", "a", "b", "aa", "ab", "ba", "bb"});
    CHECK_FALSE(it.next().has_value());

    CHECK(enumerate_words(ab, 2) == words);
    CHECK(enumerate_words(ab, 3).size() == 15);
    CHECK(enumerate_words(ab, 3).back() == "bbb");
}

TEST_CASE("word counting saturates instead of overflowing") {
    CHECK(count_words(2, 10) == 2047);
    CHECK(count_words(3, 5) == 364);
    CHECK(count_words(1, 4) == 5);
    CHECK(count_words(2, 0) == 1);
    CHECK(count_words(2, 5000) == SIZE_MAX);
}

TEST_CASE("materializing refuses up front when the count exceeds the budget") {
    Alphabet ab{std::string_view("ab")};
    CHECK_THROWS_AS(enumerate_words(ab, 40, 1000), BudgetExceeded);
}

TEST_CASE("bounded equivalence finds the first disagreeing word") {
    LinearAutomaton pal3 = fixture_automaton("pal3.json");
    EquivalenceVerdict same = equiv_bounded(pal3, pal3, 6);
    CHECK(same.equivalent_up_to);
    CHECK(same.bound == 6);
    CHECK_FALSE(same.witness.has_value());

    EquivalenceVerdict diff = equiv_bounded(pal3, complement(pal3), 4);
    CHECK_FALSE(diff.equivalent_up_to);
    REQUIRE(diff.witness.has_value());
    CHECK(*diff.witness == "");

    LinearAutomaton evenpal = fixture_automaton("evenpal.json");
    CHECK_THROWS_AS(equiv_bounded(pal3, evenpal, 3), std::invalid_argument);
}

TEST_CASE("presu equivalence widens with the middle bound") {
    LanguagePredicate pal = builtin_language("palindromes", Alphabet{std::string_view("ab")});
    Presu empty{"", ""};
    Presu a{"a", ""};
    CHECK(presu_equiv_bounded(pal, empty, a, 0).equivalent_up_to);

    EquivalenceVerdict split = presu_equiv_bounded(pal, empty, a, 1);
    CHECK_FALSE(split.equivalent_up_to);
    REQUIRE(split.witness.has_value());
    CHECK(*split.witness == "b"); // "b" stays a palindrome, "ba" does not
}

TEST_CASE("state equivalence compares completions from two states") {
    LinearAutomaton pal3 = fixture_automaton("pal3.json");
    CHECK(state_equiv_bounded(pal3, "q1", "q1", 5).equivalent_up_to);

    EquivalenceVerdict v = state_equiv_bounded(pal3, "q0", "q1", 2);
    CHECK_FALSE(v.equivalent_up_to);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == "b");

    CHECK_THROWS_AS(state_equiv_bounded(pal3, "q0", "nope", 2), std::invalid_argument);
    CHECK_THROWS_AS(state_equiv_bounded(pal3, "q0", "q1", 3, 1), BudgetExceeded);

    LinearAutomaton three_rate = fixture_automaton("three_rate.json");
    CHECK_THROWS_AS(state_equiv_bounded(three_rate, "q1", "q2", 2), std::invalid_argument);
}

TEST_CASE("the class growth probe counts equivalence cells of stub powers") {
    LanguagePredicate abc = builtin_language("anbncn");
    CHECK(class_growth_probe(abc, "a", "c", 1, 6) == 4);
    CHECK(class_growth_probe(abc, "a", "c", 2, 9) == 9);

    LanguagePredicate all = builtin_language("sigma-star");
    CHECK(class_growth_probe(all, "a", "b", 2, 4) == 1);
}

} // TEST_SUITE("oracle")
