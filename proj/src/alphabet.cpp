#include "linaut/alphabet.hpp"

#include <stdexcept>

namespace linaut {

Alphabet::Alphabet(std::string_view letters)
    : letters_(letters.begin(), letters.end()) {
    init();
}

Alphabet::Alphabet(const std::vector<char>& letters) : letters_(letters) {
    init();
}

void Alphabet::init() {
    if (letters_.empty()) {
        throw std::invalid_argument("alphabet must not be empty");
    }
    index_.fill(-1);
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(letters_[i]);
        if (index_[c] >= 0) {
            throw std::invalid_argument(std::string("duplicate letter '") + letters_[i] +
                                        "' in alphabet");
        }
        index_[c] = static_cast<int>(i);
    }
}

bool Alphabet::valid_word(std::string_view word) const {
    for (char c : word) {
        if (!contains(c)) {
            return false;
        }
    }
    return true;
}

bool Alphabet::word_less(std::string_view lhs, std::string_view rhs) const {
    if (lhs.size() != rhs.size()) {
        return lhs.size() < rhs.size();
    }
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] == rhs[i]) {
            continue;
        }
        int li = index_of(lhs[i]);
        int ri = index_of(rhs[i]);
        if (li < 0) {
            li = size() + static_cast<unsigned char>(lhs[i]);
        }
        if (ri < 0) {
            ri = size() + static_cast<unsigned char>(rhs[i]);
        }
        return li < ri;
    }
    return false;
}

} // namespace linaut
