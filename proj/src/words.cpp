#include "siginv/words.hpp"

#include <stdexcept>

namespace siginv {

std::string word_to_string(const Word& w) {
    std::string out = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    out += ']';
    return out;
}

Word word_from_string(std::string_view text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("word must look like [1,2,1]: got '" + std::string(text) + "'");
    Word w;
    std::string_view body = text.substr(1, text.size() - 2);
    if (body.empty()) return w;
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty letter in word '" + std::string(text) + "'");
        int value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("bad letter '" + std::string(tok) + "' in word");
            value = value * 10 + (c - '0');
        }
        w.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return w;
}

}  // namespace siginv
