#pragma once

#include <vector>

namespace trichow {

/// Reduced row echelon form in place; returns the pivot column of each
/// surviving row (rows end up sorted by pivot column, zero rows dropped).
template <class K>
std::vector<size_t> rref(std::vector<std::vector<K>>& rows) {
    std::vector<size_t> pivots;
    if (rows.empty()) return pivots;
    size_t ncols = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        K inv = rows[r][col].inv();
        for (size_t j = col; j < ncols; ++j) rows[r][j] = rows[r][j] * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            K f = rows[i][col];
            for (size_t j = col; j < ncols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

template <class K>
size_t matrix_rank(std::vector<std::vector<K>> rows) {
    return rref(rows).size();
}

} // namespace trichow
