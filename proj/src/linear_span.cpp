#include "siginv/linear_span.hpp"

#include <stdexcept>

namespace siginv {

namespace {

// leading term under the canonical word order
const Word& leading_word(const Polynomial& p) { return p.terms().begin()->first; }

}  // namespace

void LinearSpan::reduce(Polynomial& p, std::vector<Rational>& combo) const {
    // rows are kept sorted by leading word, each reduced against the others,
    // so one pass suffices
    for (const Row& row : rows_) {
        if (p.is_zero()) break;
        const Rational c = p.coefficient(leading_word(row.poly));
        if (c == 0) continue;
        p -= c * row.poly;
        for (size_t k = 0; k < row.combo.size(); ++k)
            if (row.combo[k] != 0) {
                if (combo.size() <= k) combo.resize(k + 1, Rational(0));
                combo[k] -= c * row.combo[k];
            }
    }
}

bool LinearSpan::insert(const Polynomial& p) {
    if (p.alphabet_size() != alphabet_size_) throw std::invalid_argument("alphabet mismatch");
    const int index = generators_inserted_++;
    Polynomial r = p;
    std::vector<Rational> combo(static_cast<size_t>(index) + 1, Rational(0));
    combo[index] = 1;
    reduce(r, combo);
    if (r.is_zero()) return false;

    const Rational lead = r.coefficient(leading_word(r));
    r *= Rational(1) / lead;
    for (auto& c : combo) c /= lead;

    // eliminate the new leading word from existing rows to stay fully reduced
    for (Row& row : rows_) {
        const Rational c = row.poly.coefficient(leading_word(r));
        if (c == 0) continue;
        row.poly -= c * r;
        if (row.combo.size() < combo.size()) row.combo.resize(combo.size(), Rational(0));
        for (size_t k = 0; k < combo.size(); ++k) row.combo[k] -= c * combo[k];
    }

    // keep rows ordered by leading word so reduce() can do a single pass
    Row incoming{std::move(r), std::move(combo)};
    WordOrder less;
    auto it = rows_.begin();
    while (it != rows_.end() && less(leading_word(it->poly), leading_word(incoming.poly))) ++it;
    rows_.insert(it, std::move(incoming));
    return true;
}

bool LinearSpan::contains(const Polynomial& p) const {
    if (p.alphabet_size() != alphabet_size_) throw std::invalid_argument("alphabet mismatch");
    Polynomial r = p;
    std::vector<Rational> combo;
    reduce(r, combo);
    return r.is_zero();
}

std::optional<std::vector<Rational>> LinearSpan::coordinates(const Polynomial& target) const {
    if (target.alphabet_size() != alphabet_size_) throw std::invalid_argument("alphabet mismatch");
    Polynomial r = target;
    std::vector<Rational> combo;
    reduce(r, combo);
    if (!r.is_zero()) return std::nullopt;
    std::vector<Rational> coords(static_cast<size_t>(generators_inserted_), Rational(0));
    for (size_t k = 0; k < combo.size(); ++k) coords[k] = -combo[k];
    return coords;
}

}  // namespace siginv
