#pragma once

#include <vector>

#include "jetvpa/scalar.hpp"

namespace jetvpa {

using QVector = std::vector<Scalar>;
using QMatrix = std::vector<QVector>;  // row major

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(QMatrix& m);

// Basis of the right kernel {v : m v = 0}, in the canonical
// one-per-free-column form produced from the RREF.
std::vector<QVector> kernel_basis(QMatrix m, int num_cols);

Scalar determinant(QMatrix m);  // square input

// Does b lie in the column span of m?
bool in_column_span(const QMatrix& m, const QVector& b);

}  // namespace jetvpa
