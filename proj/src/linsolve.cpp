#include "solint/linsolve.hpp"

namespace solint {

std::optional<std::vector<Rat>> solveExact(RatMatrix A, std::vector<Rat> b) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;

    std::vector<std::size_t> pivotRow(cols);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && A[sel][col].isZero()) ++sel;
        if (sel == rows) return std::nullopt;  // rank deficient in this column
        std::swap(A[sel], A[rank]);
        std::swap(b[sel], b[rank]);

        Rat inv = A[rank][col].inv();
        for (std::size_t j = col; j < cols; ++j) A[rank][j] *= inv;
        b[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || A[r][col].isZero()) continue;
            Rat f = A[r][col];
            for (std::size_t j = col; j < cols; ++j) A[r][j] -= f * A[rank][j];
            b[r] -= f * b[rank];
        }
        pivotRow[col] = rank;
        ++rank;
    }
    if (rank < cols) return std::nullopt;

    // Remaining rows must be consistent.
    for (std::size_t r = rank; r < rows; ++r)
        if (!b[r].isZero()) return std::nullopt;

    std::vector<Rat> x(cols);
    for (std::size_t col = 0; col < cols; ++col) x[col] = b[pivotRow[col]];
    return x;
}

}  // namespace solint
