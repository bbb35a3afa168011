#include "matkit/matrix.hpp"

#include <numeric>

namespace matkit {

void validate_matrix(const MatrixRep& a) {
    if (!is_supported_field(a.q))
        throw UnsupportedField("GF(" + std::to_string(a.q) + ") is not supported");
    if (a.rows < 0) throw BadParameters("negative row count");
    if (static_cast<int>(a.entries.size()) != a.rows)
        throw BadParameters("entry row count does not match rows");
    for (const auto& row : a.entries) {
        if (row.size() != a.columns.size())
            throw BadParameters("entry column count does not match labels");
        for (auto v : row)
            if (v >= a.q) throw BadParameters("matrix entry outside 0..q-1");
    }
    if (a.rows > static_cast<int>(a.columns.size()))
        throw BadParameters("more rows than columns");
}

namespace {

// In-place elimination on a dense copy; returns (rank, det) where det is
// meaningful only when the selection is square.
std::pair<int, std::uint8_t> eliminate(const FiniteField& f, int rows,
                                       std::vector<std::vector<std::uint8_t>> m) {
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    int rank = 0;
    std::uint8_t det = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) {
            det = 0;
            continue;
        }
        if (pivot != rank) {
            std::swap(m[pivot], m[rank]);
            det = f.mul(det, f.neg(1));
        }
        det = f.mul(det, m[rank][c]);
        const std::uint8_t piv_inv = f.inv(m[rank][c]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            const std::uint8_t factor = f.mul(m[r][c], piv_inv);
            for (int cc = c; cc < cols; ++cc)
                m[r][cc] = f.sub(m[r][cc], f.mul(factor, m[rank][cc]));
        }
        ++rank;
    }
    if (rank < rows) det = 0;
    return {rank, det};
}

std::vector<std::vector<std::uint8_t>> select(const MatrixRep& a,
                                              const std::vector<int>& cols) {
    std::vector<std::vector<std::uint8_t>> m(a.rows);
    for (int r = 0; r < a.rows; ++r) {
        m[r].reserve(cols.size());
        for (int c : cols) m[r].push_back(a.entries[r][c]);
    }
    return m;
}

}  // namespace

int matrix_rank(const MatrixRep& a, const std::vector<int>& cols) {
    const FiniteField& f = gf(a.q);
    std::vector<int> sel = cols;
    if (sel.empty() && a.cols() > 0 && cols.empty()) {
        sel.resize(a.cols());
        std::iota(sel.begin(), sel.end(), 0);
    }
    return eliminate(f, a.rows, select(a, sel)).first;
}

std::uint8_t column_determinant(const MatrixRep& a, const std::vector<int>& cols) {
    if (static_cast<int>(cols.size()) != a.rows)
        throw BadParameters("determinant needs as many columns as rows");
    return eliminate(gf(a.q), a.rows, select(a, cols)).second;
}

Matroid matroid_from_matrix(const MatrixRep& a) {
    validate_matrix(a);
    const int n = a.cols();
    if (n < 1 || n > kMaxGroundSize)
        throw BadParameters("column count must be between 1 and 16");

    const int r = matrix_rank(a);
    std::vector<Mask> bases;
    for_each_subset_of_size(full_mask(n), r, [&](Mask m) {
        std::vector<int> cols = bits_of(m);
        if (matrix_rank(a, cols) == r) bases.push_back(m);
    });
    return Matroid::unchecked(GroundSet(a.columns), std::move(bases));
}

}  // namespace matkit
