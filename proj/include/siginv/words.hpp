#ifndef SIGINV_WORDS_HPP
#define SIGINV_WORDS_HPP

#include <string>
#include <string_view>
#include <vector>

namespace siginv {

// A word indexes one iterated integral. Letter 0 is reserved for the time
// coordinate; spatial coordinates use letters 1..d.
using Letter = int;
using Word = std::vector<Letter>;

// canonical ordering: shorter words first, then lexicographic
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// "[1,2,1]"; the empty word prints as "[]"
std::string word_to_string(const Word& w);

// inverse of word_to_string; throws std::invalid_argument on malformed input
Word word_from_string(std::string_view text);

}  // namespace siginv

#endif
