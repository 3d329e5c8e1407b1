#pragma once

// Matrices over the two-element field.
//
// Row and column indices are 1-based throughout; 0 is reserved as the
// sentinel returned by low() for a zero column. The sparse type keeps a
// column-major store of sorted row-index sets together with an
// incrementally maintained row-major mirror, since the reduction needs
// cheap column XOR + low lookups and cheap row XOR at the same time.
// The dense type is used on oracle and debug paths only.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "conmat/errors.hpp"

namespace conmat {

using Index = std::int32_t;

class SparseGF2Matrix {
public:
    SparseGF2Matrix() = default;
    SparseGF2Matrix(Index n_rows, Index n_cols);

    Index n_rows() const { return n_rows_; }
    Index n_cols() const { return n_cols_; }

    bool get(Index i, Index j) const;
    void set(Index i, Index j, bool value);
    void toggle(Index i, Index j);

    // Strictly increasing row indices of the 1s in column j.
    const std::vector<Index>& column(Index j) const;
    // Strictly increasing column indices of the 1s in row i.
    const std::vector<Index>& row(Index i) const;

    // Row index of the lowest 1 in column j, or 0 for a zero column.
    Index low(Index j) const;

    // Column dst ^= column src. src must differ from dst.
    void add_column(Index src, Index dst);
    // Row to ^= row from. from must differ from to.
    void add_row(Index from, Index to);
    // add_column(s, j) followed by add_row(j, s). The result A' satisfies
    // E * A' = A * E for E = I + unit(s, j).
    void conjugate_by_addition(Index s, Index j);

    bool is_strictly_upper_triangular() const;
    std::size_t entry_count() const;

    bool operator==(const SparseGF2Matrix& other) const;

private:
    void check_row(Index i) const;
    void check_col(Index j) const;

    Index n_rows_ = 0;
    Index n_cols_ = 0;
    std::vector<std::vector<Index>> cols_; // cols_[j], slot 0 unused
    std::vector<std::vector<Index>> rows_; // rows_[i], slot 0 unused
};

class DenseGF2Matrix {
public:
    DenseGF2Matrix() = default;
    DenseGF2Matrix(Index n_rows, Index n_cols);

    static DenseGF2Matrix identity(Index n);
    static DenseGF2Matrix from_sparse(const SparseGF2Matrix& m);

    Index n_rows() const { return n_rows_; }
    Index n_cols() const { return n_cols_; }

    bool get(Index i, Index j) const;
    void set(Index i, Index j, bool value);
    void toggle(Index i, Index j);

    // Row i ^= row k of other. Widths must agree.
    void xor_row_from(Index i, const DenseGF2Matrix& other, Index k);

    bool is_zero() const;
    bool operator==(const DenseGF2Matrix& other) const;

private:
    Index n_rows_ = 0;
    Index n_cols_ = 0;
    Index words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Standard matrix product over GF(2). Inner dimensions must match.
DenseGF2Matrix multiply(const DenseGF2Matrix& a, const DenseGF2Matrix& b);

// Rank via Gaussian elimination (works on a copy).
Index gf2_rank(DenseGF2Matrix m);
Index gf2_rank(const SparseGF2Matrix& m);

// Dense mirrors of sparse matrices are debug/oracle tooling; refuse them
// above this size unless a caller overrides the limit explicitly.
inline constexpr Index kDenseCheckLimit = 512;

} // namespace conmat
