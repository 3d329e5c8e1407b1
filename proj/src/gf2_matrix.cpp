#include "conmat/gf2_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace conmat {

namespace {

// Insert x if absent, erase it if present. Keeps the vector sorted.
void sorted_toggle(std::vector<Index>& v, Index x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) {
        v.erase(it);
    } else {
        v.insert(it, x);
    }
}

bool sorted_contains(const std::vector<Index>& v, Index x) {
    return std::binary_search(v.begin(), v.end(), x);
}

std::vector<Index> symmetric_difference(const std::vector<Index>& a,
                                        const std::vector<Index>& b) {
    std::vector<Index> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

} // namespace

SparseGF2Matrix::SparseGF2Matrix(Index n_rows, Index n_cols)
    : n_rows_(n_rows), n_cols_(n_cols) {
    if (n_rows < 0 || n_cols < 0)
        throw std::invalid_argument("matrix dimensions must be nonnegative");
    cols_.resize(static_cast<std::size_t>(n_cols) + 1);
    rows_.resize(static_cast<std::size_t>(n_rows) + 1);
}

void SparseGF2Matrix::check_row(Index i) const {
    if (i < 1 || i > n_rows_)
        throw std::out_of_range("row index " + std::to_string(i) +
                                " out of range [1," + std::to_string(n_rows_) + "]");
}

void SparseGF2Matrix::check_col(Index j) const {
    if (j < 1 || j > n_cols_)
        throw std::out_of_range("column index " + std::to_string(j) +
                                " out of range [1," + std::to_string(n_cols_) + "]");
}

bool SparseGF2Matrix::get(Index i, Index j) const {
    check_row(i);
    check_col(j);
    return sorted_contains(cols_[j], i);
}

void SparseGF2Matrix::set(Index i, Index j, bool value) {
    if (get(i, j) != value) toggle(i, j);
}

void SparseGF2Matrix::toggle(Index i, Index j) {
    check_row(i);
    check_col(j);
    sorted_toggle(cols_[j], i);
    sorted_toggle(rows_[i], j);
}

const std::vector<Index>& SparseGF2Matrix::column(Index j) const {
    check_col(j);
    return cols_[j];
}

const std::vector<Index>& SparseGF2Matrix::row(Index i) const {
    check_row(i);
    return rows_[i];
}

Index SparseGF2Matrix::low(Index j) const {
    check_col(j);
    return cols_[j].empty() ? 0 : cols_[j].back();
}

void SparseGF2Matrix::add_column(Index src, Index dst) {
    check_col(src);
    check_col(dst);
    if (src == dst)
        throw std::invalid_argument("add_column: source equals destination");
    for (Index r : cols_[src]) sorted_toggle(rows_[r], dst);
    cols_[dst] = symmetric_difference(cols_[dst], cols_[src]);
}

void SparseGF2Matrix::add_row(Index from, Index to) {
    check_row(from);
    check_row(to);
    if (from == to)
        throw std::invalid_argument("add_row: source equals destination");
    for (Index c : rows_[from]) sorted_toggle(cols_[c], to);
    rows_[to] = symmetric_difference(rows_[to], rows_[from]);
}

void SparseGF2Matrix::conjugate_by_addition(Index s, Index j) {
    if (s == j)
        throw std::invalid_argument("conjugate_by_addition: indices must differ");
    add_column(s, j);
    add_row(j, s);
}

bool SparseGF2Matrix::is_strictly_upper_triangular() const {
    for (Index j = 1; j <= n_cols_; ++j) {
        if (!cols_[j].empty() && cols_[j].back() >= j) return false;
    }
    return true;
}

std::size_t SparseGF2Matrix::entry_count() const {
    std::size_t total = 0;
    for (Index j = 1; j <= n_cols_; ++j) total += cols_[j].size();
    return total;
}

bool SparseGF2Matrix::operator==(const SparseGF2Matrix& other) const {
    return n_rows_ == other.n_rows_ && n_cols_ == other.n_cols_ &&
           cols_ == other.cols_;
}

DenseGF2Matrix::DenseGF2Matrix(Index n_rows, Index n_cols)
    : n_rows_(n_rows), n_cols_(n_cols), words_per_row_((n_cols + 63) / 64),
      bits_(static_cast<std::size_t>(n_rows) * words_per_row_, 0) {
    if (n_rows < 0 || n_cols < 0)
        throw std::invalid_argument("matrix dimensions must be nonnegative");
}

DenseGF2Matrix DenseGF2Matrix::identity(Index n) {
    DenseGF2Matrix m(n, n);
    for (Index i = 1; i <= n; ++i) m.set(i, i, true);
    return m;
}

DenseGF2Matrix DenseGF2Matrix::from_sparse(const SparseGF2Matrix& s) {
    DenseGF2Matrix m(s.n_rows(), s.n_cols());
    for (Index j = 1; j <= s.n_cols(); ++j)
        for (Index i : s.column(j)) m.set(i, j, true);
    return m;
}

bool DenseGF2Matrix::get(Index i, Index j) const {
    if (i < 1 || i > n_rows_ || j < 1 || j > n_cols_)
        throw std::out_of_range("dense matrix index out of range");
    const std::size_t base = static_cast<std::size_t>(i - 1) * words_per_row_;
    return (bits_[base + static_cast<std::size_t>(j - 1) / 64] >>
            (static_cast<std::size_t>(j - 1) % 64)) & 1u;
}

void DenseGF2Matrix::set(Index i, Index j, bool value) {
    if (get(i, j) != value) toggle(i, j);
}

void DenseGF2Matrix::toggle(Index i, Index j) {
    if (i < 1 || i > n_rows_ || j < 1 || j > n_cols_)
        throw std::out_of_range("dense matrix index out of range");
    const std::size_t base = static_cast<std::size_t>(i - 1) * words_per_row_;
    bits_[base + static_cast<std::size_t>(j - 1) / 64] ^=
        std::uint64_t{1} << (static_cast<std::size_t>(j - 1) % 64);
}

void DenseGF2Matrix::xor_row_from(Index i, const DenseGF2Matrix& other, Index k) {
    if (n_cols_ != other.n_cols_)
        throw std::invalid_argument("xor_row_from: widths differ");
    const std::size_t dst = static_cast<std::size_t>(i - 1) * words_per_row_;
    const std::size_t src = static_cast<std::size_t>(k - 1) * words_per_row_;
    for (Index w = 0; w < words_per_row_; ++w)
        bits_[dst + w] ^= other.bits_[src + w];
}

bool DenseGF2Matrix::is_zero() const {
    for (std::uint64_t w : bits_)
        if (w) return false;
    return true;
}

bool DenseGF2Matrix::operator==(const DenseGF2Matrix& other) const {
    return n_rows_ == other.n_rows_ && n_cols_ == other.n_cols_ &&
           bits_ == other.bits_;
}

DenseGF2Matrix multiply(const DenseGF2Matrix& a, const DenseGF2Matrix& b) {
    if (a.n_cols() != b.n_rows())
        throw std::invalid_argument("multiply: inner dimensions differ");
    DenseGF2Matrix c(a.n_rows(), b.n_cols());
    for (Index i = 1; i <= a.n_rows(); ++i)
        for (Index k = 1; k <= a.n_cols(); ++k)
            if (a.get(i, k)) c.xor_row_from(i, b, k);
    return c;
}

Index gf2_rank(DenseGF2Matrix m) {
    Index rank = 0;
    for (Index j = 1; j <= m.n_cols() && rank < m.n_rows(); ++j) {
        Index pivot = 0;
        for (Index i = rank + 1; i <= m.n_rows(); ++i) {
            if (m.get(i, j)) {
                pivot = i;
                break;
            }
        }
        if (pivot == 0) continue;
        ++rank;
        if (pivot != rank) {
            // swap rows via three XORs
            m.xor_row_from(rank, m, pivot);
            m.xor_row_from(pivot, m, rank);
            m.xor_row_from(rank, m, pivot);
        }
        for (Index i = rank + 1; i <= m.n_rows(); ++i)
            if (m.get(i, j)) m.xor_row_from(i, m, rank);
    }
    return rank;
}

Index gf2_rank(const SparseGF2Matrix& m) {
    return gf2_rank(DenseGF2Matrix::from_sparse(m));
}

} // namespace conmat
