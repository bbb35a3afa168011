#ifndef MATKIT_MATRIX_HPP
#define MATKIT_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "matkit/gf.hpp"
#include "matkit/matroid.hpp"

namespace matkit {

/// An r x n matrix over GF(q) with labeled columns; the bridge between
/// linear algebra and matroids.
struct MatrixRep {
    int q = 2;
    int rows = 0;
    std::vector<std::string> columns;
    std::vector<std::vector<std::uint8_t>> entries;  // entries[row][col]

    std::uint8_t at(int r, int c) const { return entries[r][c]; }
    int cols() const { return static_cast<int>(columns.size()); }
};

void validate_matrix(const MatrixRep& a);

/// Rank of the column submatrix selected by `cols` (all columns if empty),
/// by Gaussian elimination over the field tables.
int matrix_rank(const MatrixRep& a, const std::vector<int>& cols = {});

/// Determinant of the square matrix formed by the selected columns.
std::uint8_t column_determinant(const MatrixRep& a, const std::vector<int>& cols);

/// The matroid whose bases are the maximal independent column sets of a.
Matroid matroid_from_matrix(const MatrixRep& a);

}  // namespace matkit

#endif
