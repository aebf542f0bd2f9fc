#pragma once

#include <optional>
#include <vector>

namespace binlen {

/// Dense row-major matrix over an exact field scalar. The scalar type needs
/// value semantics, +,-,*,/ and is_zero().
template <class S>
class DenseMatrix {
public:
    DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    S& at(int i, int j) { return data_[i * cols_ + j]; }
    const S& at(int i, int j) const { return data_[i * cols_ + j]; }

private:
    int rows_, cols_;
    std::vector<S> data_;
};

/// Reduced row echelon form in place. Returns the pivot columns.
template <class S>
std::vector<int> rref_in_place(DenseMatrix<S>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        S inv_pivot = m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) / inv_pivot;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            S factor = m.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Solves m * x = rhs exactly; free variables are set to zero. Absent when
/// the system is inconsistent.
template <class S>
std::optional<std::vector<S>> solve_linear(const DenseMatrix<S>& m, const std::vector<S>& rhs) {
    DenseMatrix<S> aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[static_cast<std::size_t>(i)];
    }
    auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<S> x(m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = aug.at(static_cast<int>(k), m.cols());
    return x;
}

/// Nullspace basis from the RREF pivot structure, one vector per free column.
template <class S>
std::vector<std::vector<S>> nullspace_raw(DenseMatrix<S> m) {
    auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<S>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<S> v(m.cols());
        v[free] = S(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = S(0) - m.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace binlen
