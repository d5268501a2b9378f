#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linaut/run.hpp"

namespace linaut {

inline constexpr std::size_t kDefaultBudget = 10'000'000;

// Thrown when an enumeration or sweep would exceed its membership-test budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A decidable language given by a total membership predicate over words of
// its alphabet.
struct LanguagePredicate {
    std::string name;
    Alphabet alphabet;
    std::function<bool(std::string_view)> member;
};

// Built-in languages: "palindromes", "even-palindromes", "1n03n" (1^n 0^{3n}),
// "anbncn" (a^n b^n c^n), "sigma-star", "empty". The structure-generic ones
// accept an alphabet override; the two fixed ones do not.
LanguagePredicate builtin_language(std::string_view name);
LanguagePredicate builtin_language(std::string_view name, const Alphabet& alphabet);
std::vector<std::string> builtin_language_names();

// The language accepted by a deterministic automaton, as a predicate.
LanguagePredicate language_of(const LinearAutomaton& a, std::string name = "");

// Streams all words of length <= maxlen in length-lexicographic order
// (letters in declaration order), starting with the empty word.
class WordEnumerator {
public:
    WordEnumerator(const Alphabet& alphabet, std::size_t maxlen);

    // The next word, or nullopt when exhausted.
    std::optional<std::string> next();

private:
    const Alphabet* alphabet_;
    std::size_t maxlen_;
    std::vector<int> digits_;
    bool started_ = false;
    bool done_ = false;
};

// Number of words of length <= maxlen over k letters, saturating at SIZE_MAX.
std::size_t count_words(int alphabet_size, std::size_t maxlen);

// Materializes the length-lex word list; refuses up front when the count
// exceeds the budget.
std::vector<std::string> enumerate_words(const Alphabet& alphabet,
                                         std::size_t maxlen,
                                         std::size_t budget = kDefaultBudget);

struct EquivalenceVerdict {
    bool equivalent_up_to = true;
    // First length-lex witness of disagreement when not equivalent.
    std::optional<std::string> witness;
    std::size_t bound = 0;
};

// Bounded language equality of two deterministic automata over the same
// alphabet: acceptance compared on every word of length <= maxlen.
EquivalenceVerdict equiv_bounded(const LinearAutomaton& a,
                                 const LinearAutomaton& b,
                                 std::size_t maxlen);

// Bounded presu equivalence with respect to a language: membership of
// prefix1 + w + suffix1 vs prefix2 + w + suffix2 for every middle w with
// |w| <= mid_bound. The budget counts performed membership tests.
EquivalenceVerdict presu_equiv_bounded(const LanguagePredicate& language,
                                       const Presu& p1,
                                       const Presu& p2,
                                       std::size_t mid_bound,
                                       std::size_t budget = kDefaultBudget);

// Bounded state equivalence: acceptance of runs started in (s, w) compared
// for every middle w with |w| <= mid_bound. Requires a deterministic
// automaton complete on its reachable states; s1, s2 must be reachable.
EquivalenceVerdict state_equiv_bounded(const LinearAutomaton& a,
                                       const std::string& s1,
                                       const std::string& s2,
                                       std::size_t mid_bound,
                                       std::size_t budget = kDefaultBudget);

// Partitions the presus (prefix_stub^m, suffix_stub^k), 0 <= m, k <= max_power,
// by bounded presu equivalence and returns the number of cells. A growing
// count witnesses that the language needs ever more classes.
std::size_t class_growth_probe(const LanguagePredicate& language,
                               std::string_view prefix_stub,
                               std::string_view suffix_stub,
                               std::size_t max_power,
                               std::size_t mid_bound,
                               std::size_t budget = kDefaultBudget);

} // namespace linaut
