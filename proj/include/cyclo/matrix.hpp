#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "cyclo/rational.hpp"

namespace cyclo {

// Sparse vector: (index, value) pairs sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

SparseVec to_sparse(const std::vector<Rational>& dense);
std::vector<Rational> to_dense(const SparseVec& v, std::size_t dim);

// Sparse exact-rational matrix. Only nonzero entries are stored; all mutators
// keep that invariant.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return nnz_; }
    bool is_zero() const { return nnz_ == 0; }

    const Rational& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& v);
    void add_at(std::size_t r, std::size_t c, const Rational& v);

    const std::map<std::size_t, Rational>& row(std::size_t r) const { return data_[r]; }

    RationalMatrix transpose() const;
    RationalMatrix times(const RationalMatrix& other) const;
    RationalMatrix plus(const RationalMatrix& other) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    SparseVec apply_sparse(const SparseVec& v) const;

    // Pastes `block` with its (0,0) entry at (r0, c0).
    void insert_block(std::size_t r0, std::size_t c0, const RationalMatrix& block);

    bool operator==(const RationalMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    static RationalMatrix identity(std::size_t n);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t nnz_ = 0;
    std::vector<std::map<std::size_t, Rational>> data_;
};

} // namespace cyclo
