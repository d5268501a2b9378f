#include "linaut/oracle.hpp"

#include <limits>
#include <memory>

#include "oracle_internal.hpp"

namespace linaut {

namespace {

bool is_palindrome(std::string_view w) {
    for (std::size_t i = 0, j = w.size(); i + 1 <= j; ++i, --j) {
        if (w[i] != w[j - 1]) {
            return false;
        }
    }
    return true;
}

// 1^n 0^{3n}
bool is_one_zero3(std::string_view w) {
    std::size_t n = 0;
    while (n < w.size() && w[n] == '1') {
        ++n;
    }
    if (w.size() != 4 * n) {
        return false;
    }
    for (std::size_t i = n; i < w.size(); ++i) {
        if (w[i] != '0') {
            return false;
        }
    }
    return true;
}

// a^n b^n c^n
bool is_abc_block(std::string_view w) {
    if (w.size() % 3 != 0) {
        return false;
    }
    std::size_t n = w.size() / 3;
    for (std::size_t i = 0; i < w.size(); ++i) {
        char want = i < n ? 'a' : (i < 2 * n ? 'b' : 'c');
        if (w[i] != want) {
            return false;
        }
    }
    return true;
}

} // namespace

namespace detail {

EquivalenceVerdict presu_equiv_counted(const LanguagePredicate& language,
                                       const Presu& p1,
                                       const Presu& p2,
                                       std::size_t mid_bound,
                                       BudgetCounter& counter) {
    EquivalenceVerdict verdict;
    verdict.bound = mid_bound;
    WordEnumerator middles(language.alphabet, mid_bound);
    while (std::optional<std::string> middle = middles.next()) {
        counter.charge(2);
        if (language.member(p1.prefix + *middle + p1.suffix) !=
            language.member(p2.prefix + *middle + p2.suffix)) {
            verdict.equivalent_up_to = false;
            verdict.witness = *middle;
            return verdict;
        }
    }
    return verdict;
}

EquivalenceVerdict state_equiv_counted(const LinearAutomaton& a,
                                       const std::string& s1,
                                       const std::string& s2,
                                       std::size_t mid_bound,
                                       BudgetCounter& counter) {
    EquivalenceVerdict verdict;
    verdict.bound = mid_bound;
    WordEnumerator middles(a.alphabet(), mid_bound);
    while (std::optional<std::string> middle = middles.next()) {
        counter.charge(2);
        if (run_from(a, s1, *middle).accepted != run_from(a, s2, *middle).accepted) {
            verdict.equivalent_up_to = false;
            verdict.witness = *middle;
            return verdict;
        }
    }
    return verdict;
}

} // namespace detail

LanguagePredicate builtin_language(std::string_view name) {
    if (name == "palindromes") {
        return builtin_language(name, Alphabet("abc"));
    }
    if (name == "even-palindromes" || name == "sigma-star" || name == "empty") {
        return builtin_language(name, Alphabet("ab"));
    }
    if (name == "1n03n") {
        return {"1n03n", Alphabet("01"), is_one_zero3};
    }
    if (name == "anbncn") {
        return {"anbncn", Alphabet("abc"), is_abc_block};
    }
    std::string names;
    for (const std::string& n : builtin_language_names()) {
        names += names.empty() ? n : ", " + n;
    }
    throw std::invalid_argument("unknown language '" + std::string(name) + "' (known: " + names +
                                ")");
}

LanguagePredicate builtin_language(std::string_view name, const Alphabet& alphabet) {
    if (name == "palindromes") {
        return {"palindromes", alphabet, is_palindrome};
    }
    if (name == "even-palindromes") {
        return {"even-palindromes", alphabet,
                [](std::string_view w) { return w.size() % 2 == 0 && is_palindrome(w); }};
    }
    if (name == "sigma-star") {
        return {"sigma-star", alphabet, [](std::string_view) { return true; }};
    }
    if (name == "empty") {
        return {"empty", alphabet, [](std::string_view) { return false; }};
    }
    if (name == "1n03n" || name == "anbncn") {
        LanguagePredicate fixed = builtin_language(name);
        if (!(fixed.alphabet == alphabet)) {
            throw std::invalid_argument("language '" + std::string(name) +
                                        "' has a fixed alphabet");
        }
        return fixed;
    }
    return builtin_language(name); // throws with the known-name list
}

std::vector<std::string> builtin_language_names() {
    return {"palindromes", "even-palindromes", "1n03n", "anbncn", "sigma-star", "empty"};
}

LanguagePredicate language_of(const LinearAutomaton& a, std::string name) {
    if (!a.deterministic()) {
        throw std::invalid_argument("language_of: automaton is not deterministic");
    }
    auto shared = std::make_shared<LinearAutomaton>(a);
    return {name.empty() ? "automaton" : std::move(name), a.alphabet(),
            [shared](std::string_view w) { return run(*shared, w).accepted; }};
}

WordEnumerator::WordEnumerator(const Alphabet& alphabet, std::size_t maxlen)
    : alphabet_(&alphabet), maxlen_(maxlen) {}

std::optional<std::string> WordEnumerator::next() {
    if (done_) {
        return std::nullopt;
    }
    if (!started_) {
        started_ = true;
        return std::string();
    }
    // Odometer increment; on overflow move to the next length.
    std::size_t i = digits_.size();
    while (i > 0 && digits_[i - 1] == alphabet_->size() - 1) {
        digits_[--i] = 0;
    }
    if (i == 0) {
        if (digits_.size() == maxlen_) {
            done_ = true;
            return std::nullopt;
        }
        digits_.assign(digits_.size() + 1, 0);
    } else {
        ++digits_[i - 1];
    }
    std::string word(digits_.size(), 0);
    for (std::size_t k = 0; k < digits_.size(); ++k) {
        word[k] = alphabet_->letter(digits_[k]);
    }
    return word;
}

std::size_t count_words(int alphabet_size, std::size_t maxlen) {
    constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
    std::size_t total = 0;
    std::size_t level = 1;
    for (std::size_t len = 0; len <= maxlen; ++len) {
        if (kMax - total < level) {
            return kMax;
        }
        total += level;
        if (level > kMax / static_cast<std::size_t>(alphabet_size)) {
            if (len + 1 <= maxlen) {
                return kMax;
            }
        } else {
            level *= static_cast<std::size_t>(alphabet_size);
        }
    }
    return total;
}

std::vector<std::string> enumerate_words(const Alphabet& alphabet,
                                         std::size_t maxlen,
                                         std::size_t budget) {
    std::size_t count = count_words(alphabet.size(), maxlen);
    if (count > budget) {
        throw BudgetExceeded("enumerate_words: " + std::to_string(count) +
                             " words exceed the budget of " + std::to_string(budget));
    }
    std::vector<std::string> words;
    words.reserve(count);
    WordEnumerator stream(alphabet, maxlen);
    while (std::optional<std::string> word = stream.next()) {
        words.push_back(std::move(*word));
    }
    return words;
}

EquivalenceVerdict equiv_bounded(const LinearAutomaton& a,
                                 const LinearAutomaton& b,
                                 std::size_t maxlen) {
    if (!(a.alphabet() == b.alphabet())) {
        throw std::invalid_argument("equiv_bounded: automata have different alphabets");
    }
    EquivalenceVerdict verdict;
    verdict.bound = maxlen;
    WordEnumerator words(a.alphabet(), maxlen);
    while (std::optional<std::string> word = words.next()) {
        if (run(a, *word).accepted != run(b, *word).accepted) {
            verdict.equivalent_up_to = false;
            verdict.witness = *word;
            return verdict;
        }
    }
    return verdict;
}

EquivalenceVerdict presu_equiv_bounded(const LanguagePredicate& language,
                                       const Presu& p1,
                                       const Presu& p2,
                                       std::size_t mid_bound,
                                       std::size_t budget) {
    detail::BudgetCounter counter{0, budget, "presu_equiv_bounded"};
    return detail::presu_equiv_counted(language, p1, p2, mid_bound, counter);
}

EquivalenceVerdict state_equiv_bounded(const LinearAutomaton& a,
                                       const std::string& s1,
                                       const std::string& s2,
                                       std::size_t mid_bound,
                                       std::size_t budget) {
    if (!a.deterministic()) {
        throw std::invalid_argument("state_equiv_bounded: automaton is not deterministic");
    }
    if (!a.complete_on_reachable()) {
        throw std::invalid_argument(
            "state_equiv_bounded: automaton is not complete on reachable states");
    }
    for (const std::string* s : {&s1, &s2}) {
        int idx = a.state_index(*s);
        if (idx < 0) {
            throw std::invalid_argument("state_equiv_bounded: unknown state '" + *s + "'");
        }
        if (!a.reachable()[static_cast<std::size_t>(idx)]) {
            throw std::invalid_argument("state_equiv_bounded: state '" + *s + "' is unreachable");
        }
    }
    detail::BudgetCounter counter{0, budget, "state_equiv_bounded"};
    return detail::state_equiv_counted(a, s1, s2, mid_bound, counter);
}

std::size_t class_growth_probe(const LanguagePredicate& language,
                               std::string_view prefix_stub,
                               std::string_view suffix_stub,
                               std::size_t max_power,
                               std::size_t mid_bound,
                               std::size_t budget) {
    std::vector<Presu> presus;
    std::string prefix;
    for (std::size_t m = 0; m <= max_power; ++m) {
        std::string suffix;
        for (std::size_t k = 0; k <= max_power; ++k) {
            presus.push_back({prefix, suffix});
            suffix += suffix_stub;
        }
        prefix += prefix_stub;
    }

    detail::BudgetCounter counter{0, budget, "class_growth_probe"};
    std::vector<Presu> representatives;
    for (const Presu& presu : presus) {
        bool placed = false;
        for (const Presu& rep : representatives) {
            if (detail::presu_equiv_counted(language, presu, rep, mid_bound, counter)
                    .equivalent_up_to) {
                placed = true;
                break;
            }
        }
        if (!placed) {
            representatives.push_back(presu);
        }
    }
    return representatives.size();
}

} // namespace linaut
