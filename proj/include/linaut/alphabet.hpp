#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace linaut {

// Ordered set of single-character letters. Declaration order is significant:
// word enumeration and canonical output follow it.
class Alphabet {
public:
    explicit Alphabet(std::string_view letters);
    explicit Alphabet(const std::vector<char>& letters);

    int size() const { return static_cast<int>(letters_.size()); }
    char letter(int index) const { return letters_[static_cast<std::size_t>(index)]; }
    const std::vector<char>& letters() const { return letters_; }

    bool contains(char c) const { return index_of(c) >= 0; }
    // Position of c in declaration order, -1 when absent.
    int index_of(char c) const { return index_[static_cast<unsigned char>(c)]; }
    bool valid_word(std::string_view word) const;

    // Compares words by length, then letter-wise by declaration order.
    // Letters outside the alphabet sort after all declared letters.
    bool word_less(std::string_view lhs, std::string_view rhs) const;

    friend bool operator==(const Alphabet& lhs, const Alphabet& rhs) {
        return lhs.letters_ == rhs.letters_;
    }

private:
    void init();

    std::vector<char> letters_;
    std::array<int, 256> index_{};
};

} // namespace linaut
