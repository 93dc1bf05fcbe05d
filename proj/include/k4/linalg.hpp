#ifndef K4_LINALG_HPP
#define K4_LINALG_HPP

#include "k4/scalars.hpp"

#include <vector>

namespace k4 {

// Dense matrix over Q(i). All dimensions in this project stay small (at most
// a few hundred columns), so exact dense elimination is the simplest safe
// choice. Pivoting is deterministic: first nonzero entry in column order.
class Matrix {
public:
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows, std::vector<GRat>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    GRat& at(int r, int c) { return a_[r][c]; }
    const GRat& at(int r, int c) const { return a_[r][c]; }

    void append_row(const std::vector<GRat>& row);

    // Reduced row echelon form, in place. Returns pivot column indices.
    std::vector<int> rref();

    int rank() const;

    // Basis of the right nullspace. Each vector has its first nonzero
    // coordinate normalized to 1; vectors are ordered by free column index.
    std::vector<std::vector<GRat>> nullspace() const;

    // Solves A x = b; returns true and fills x on success (any solution).
    bool solve(const std::vector<GRat>& b, std::vector<GRat>& x) const;

    // Rank of the matrix obtained by stacking this on top of other
    // (other must have the same number of columns).
    int stacked_rank(const Matrix& other) const;

private:
    int rows_, cols_;
    std::vector<std::vector<GRat>> a_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
bool is_zero_matrix(const Matrix& m);

} // namespace k4

#endif
