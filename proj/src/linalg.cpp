#include "jetvpa/linalg.hpp"

#include <stdexcept>

namespace jetvpa {

std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        Scalar inv = 1 / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Scalar f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

std::vector<QVector> kernel_basis(QMatrix m, int num_cols) {
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(num_cols, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<QVector> basis;
    for (int free = 0; free < num_cols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(num_cols, Scalar(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar determinant(QMatrix m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: non-square matrix");
    Scalar det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Scalar(0);
        if (pivot != col) {
            std::swap(m[col], m[pivot]);
            det = -det;
        }
        det *= m[col][col];
        Scalar inv = 1 / m[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Scalar f = m[i][col] * inv;
            for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

bool in_column_span(const QMatrix& m, const QVector& b) {
    if (m.empty()) {
        for (const Scalar& x : b)
            if (x != 0) return false;
        return true;
    }
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    if (b.size() != rows) throw std::invalid_argument("in_column_span: size mismatch");
    QMatrix aug(rows, QVector(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<int> pivots = rref(aug);
    for (int p : pivots)
        if (p == static_cast<int>(cols)) return false;
    return true;
}

}  // namespace jetvpa
