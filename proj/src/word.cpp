#include "specband/word.hpp"

#include <cmath>

namespace specband {

WordSet all_words(const Alphabet& alphabet, int n) {
    if (n < 0) throw config_error("word length must be nonnegative");
    if (n > 24) throw resource_error("refusing to enumerate words of length > 24");
    WordSet out;
    out.length = n;
    Word w(static_cast<std::size_t>(n), '0');
    while (true) {
        out.words.insert(w);
        int pos = n - 1;
        while (pos >= 0) {
            if (char_to_symbol(w[pos]) + 1 < alphabet.size) {
                w[pos] = symbol_to_char(char_to_symbol(w[pos]) + 1);
                break;
            }
            w[pos] = '0';
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

}  // namespace specband
