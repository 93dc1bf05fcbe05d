#include "k4/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace k4 {

void Matrix::append_row(const std::vector<GRat>& row) {
    if (static_cast<int>(row.size()) != cols_)
        throw std::invalid_argument("Matrix::append_row: size mismatch");
    a_.push_back(row);
    ++rows_;
}

std::vector<int> Matrix::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i) {
            if (!a_[i][c].is_zero()) { p = i; break; }
        }
        if (p < 0) continue;
        std::swap(a_[r], a_[p]);
        GRat inv = a_[r][c].inv();
        for (int j = c; j < cols_; ++j) a_[r][j] *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || a_[i][c].is_zero()) continue;
            GRat f = a_[i][c];
            for (int j = c; j < cols_; ++j) a_[i][j] -= f * a_[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int Matrix::rank() const {
    Matrix tmp = *this;
    return static_cast<int>(tmp.rref().size());
}

std::vector<std::vector<GRat>> Matrix::nullspace() const {
    Matrix tmp = *this;
    std::vector<int> pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<GRat>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<GRat> v(cols_);
        v[f] = GRat(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -tmp.a_[r][f];
        // First nonzero coordinate is at a pivot column before f, or at f
        // itself; normalize it to 1.
        for (int c = 0; c < cols_; ++c) {
            if (!v[c].is_zero()) {
                GRat inv = v[c].inv();
                for (int j = 0; j < cols_; ++j) v[j] *= inv;
                break;
            }
        }
        basis.push_back(v);
    }
    return basis;
}

bool Matrix::solve(const std::vector<GRat>& b, std::vector<GRat>& x) const {
    assert(static_cast<int>(b.size()) == rows_);
    Matrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.a_[i][j] = a_[i][j];
        aug.a_[i][cols_] = b[i];
    }
    std::vector<int> pivots = aug.rref();
    for (int c : pivots)
        if (c == cols_) return false;
    x.assign(cols_, GRat(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.a_[r][cols_];
    return true;
}

int Matrix::stacked_rank(const Matrix& other) const {
    assert(other.cols_ == cols_);
    Matrix tmp = *this;
    for (const auto& row : other.a_) tmp.append_row(row);
    return tmp.rank();
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    assert(a.cols() == b.rows());
    Matrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

bool is_zero_matrix(const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

} // namespace k4
