#include "siginv/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace siginv {

bool RectTableau::is_standard() const {
    if (rows < 1 || cols < 1 || static_cast<int>(cells.size()) != rows) return false;
    std::vector<bool> seen(static_cast<size_t>(rows) * cols + 1, false);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(cells[r].size()) != cols) return false;
        for (int c = 0; c < cols; ++c) {
            int v = cells[r][c];
            if (v < 1 || v > rows * cols || seen[v]) return false;
            seen[v] = true;
            if (c > 0 && cells[r][c - 1] >= v) return false;
            if (r > 0 && cells[r - 1][c] >= v) return false;
        }
    }
    return true;
}

std::vector<int> RectTableau::column(int j) const {
    if (j < 0 || j >= cols) throw std::out_of_range("column index");
    std::vector<int> out(rows);
    for (int r = 0; r < rows; ++r) out[r] = cells[r][j];
    return out;
}

std::string RectTableau::to_string() const {
    std::string s = "[";
    for (int r = 0; r < rows; ++r) {
        s += r ? ",[" : "[";
        for (int c = 0; c < cols; ++c) {
            if (c) s += ',';
            s += std::to_string(cells[r][c]);
        }
        s += ']';
    }
    return s + "]";
}

std::vector<std::vector<int>> columns(const RectTableau& t) {
    std::vector<std::vector<int>> out;
    out.reserve(t.cols);
    for (int j = 0; j < t.cols; ++j) out.push_back(t.column(j));
    return out;
}

namespace {

// place values 1..rows*cols one at a time; value k may go to any cell whose
// left and upper neighbours are already filled, which yields each standard
// tableau exactly once
void place(int rows, int cols, int next, std::vector<int>& fill_count, RectTableau& t,
           std::vector<RectTableau>& out) {
    if (next > rows * cols) {
        out.push_back(t);
        return;
    }
    for (int r = 0; r < rows; ++r) {
        int c = fill_count[r];
        if (c >= cols) continue;
        if (r > 0 && fill_count[r - 1] <= c) continue;
        t.cells[r][c] = next;
        ++fill_count[r];
        place(rows, cols, next + 1, fill_count, t, out);
        --fill_count[r];
    }
}

}  // namespace

std::vector<RectTableau> enumerate_standard(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("tableau shape must be positive");
    RectTableau t{rows, cols, std::vector<std::vector<int>>(rows, std::vector<int>(cols, 0))};
    std::vector<int> fill_count(rows, 0);
    std::vector<RectTableau> out;
    place(rows, cols, 1, fill_count, t, out);
    std::sort(out.begin(), out.end(),
              [](const RectTableau& a, const RectTableau& b) { return a.cells < b.cells; });
    return out;
}

std::uint64_t hook_length_count(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("tableau shape must be positive");
    // n! / prod of hooks, with gcd reduction after every factor so the
    // intermediates stay no larger than n! (exact up to rows*cols = 20)
    const int n = rows * cols;
    std::vector<int> hooks;
    hooks.reserve(n);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) hooks.push_back((rows - 1 - r) + (cols - 1 - c) + 1);
    std::uint64_t numerator = 1;
    std::uint64_t denominator = 1;
    for (int k = 1; k <= n; ++k) {
        numerator *= static_cast<std::uint64_t>(k);
        denominator *= static_cast<std::uint64_t>(hooks[k - 1]);
        std::uint64_t g = std::gcd(numerator, denominator);
        numerator /= g;
        denominator /= g;
    }
    if (denominator != 1) throw std::logic_error("hook length formula must divide n!");
    return numerator;
}

}  // namespace siginv
