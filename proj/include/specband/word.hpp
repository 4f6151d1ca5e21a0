#pragma once

#include <set>
#include <string>

#include "specband/errors.hpp"

namespace specband {

using Symbol = int;

// Words are strings of digit characters, one per symbol. This is also
// the serialization format, which caps usable alphabets at 10 symbols.
using Word = std::string;

inline char symbol_to_char(Symbol s) { return static_cast<char>('0' + s); }
inline Symbol char_to_symbol(char c) { return c - '0'; }

struct Alphabet {
    int size = 2;  // symbols are 0 .. size-1

    explicit Alphabet(int n = 2) : size(n) {
        if (n < 1 || n > 10)
            throw config_error("alphabet size must be in [1, 10], got " + std::to_string(n));
    }
    bool contains(Symbol s) const { return s >= 0 && s < size; }
    bool operator==(const Alphabet&) const = default;
};

// A set of equal-length words. std::set keeps iteration deterministic.
struct WordSet {
    int length = 0;
    std::set<Word> words;

    bool contains(const Word& w) const { return words.count(w) > 0; }
    std::size_t size() const { return words.size(); }
    bool empty() const { return words.empty(); }
};

// All |A|^n words of length n, in lexicographic order.
WordSet all_words(const Alphabet& alphabet, int n);

}  // namespace specband
