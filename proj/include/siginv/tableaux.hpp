#ifndef SIGINV_TABLEAUX_HPP
#define SIGINV_TABLEAUX_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace siginv {

// rectangular standard Young tableau: rows x cols cells filled with
// 1..rows*cols, increasing along every row and down every column
struct RectTableau {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int>> cells;  // cells[r][c]

    bool is_standard() const;
    // column j, top to bottom
    std::vector<int> column(int j) const;
    // "[[1,2],[3,4]]"
    std::string to_string() const;
};

// top-to-bottom columns, left to right
std::vector<std::vector<int>> columns(const RectTableau& t);

// all standard tableaux of the rows x cols rectangle, sorted by row-major
// entry sequence
std::vector<RectTableau> enumerate_standard(int rows, int cols);

// count via the hook length formula, as an independent cross-check of the
// enumeration
std::uint64_t hook_length_count(int rows, int cols);

}  // namespace siginv

#endif
