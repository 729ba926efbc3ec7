#include "cyclo/matrix.hpp"

#include <stdexcept>

namespace cyclo {

namespace {
const Rational kZero = 0;
}

SparseVec to_sparse(const std::vector<Rational>& dense) {
    SparseVec out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0) out.emplace_back(i, dense[i]);
    return out;
}

std::vector<Rational> to_dense(const SparseVec& v, std::size_t dim) {
    std::vector<Rational> out(dim, Rational(0));
    for (const auto& [i, val] : v) out.at(i) = val;
    return out;
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("RationalMatrix::at");
    auto it = data_[r].find(c);
    return it == data_[r].end() ? kZero : it->second;
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("RationalMatrix::set");
    auto it = data_[r].find(c);
    if (v == 0) {
        if (it != data_[r].end()) {
            data_[r].erase(it);
            --nnz_;
        }
        return;
    }
    if (it == data_[r].end()) {
        data_[r].emplace(c, v);
        ++nnz_;
    } else {
        it->second = v;
    }
}

void RationalMatrix::add_at(std::size_t r, std::size_t c, const Rational& v) {
    if (v == 0) return;
    if (r >= rows_ || c >= cols_) throw std::out_of_range("RationalMatrix::add_at");
    auto it = data_[r].find(c);
    if (it == data_[r].end()) {
        data_[r].emplace(c, v);
        ++nnz_;
        return;
    }
    it->second += v;
    if (it->second == 0) {
        data_[r].erase(it);
        --nnz_;
    }
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) out.set(c, r, v);
    return out;
}

RationalMatrix RationalMatrix::times(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("RationalMatrix::times: shape mismatch");
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (const auto& [k, v] : data_[r]) {
            for (const auto& [c, w] : other.data_[k]) out.add_at(r, c, v * w);
        }
    }
    return out;
}

RationalMatrix RationalMatrix::plus(const RationalMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("RationalMatrix::plus: shape mismatch");
    RationalMatrix out = *this;
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : other.data_[r]) out.add_at(r, c, v);
    return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("RationalMatrix::apply: shape mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, w] : data_[r]) out[r] += w * v[c];
    return out;
}

SparseVec RationalMatrix::apply_sparse(const SparseVec& v) const {
    std::map<std::size_t, Rational> acc;
    for (const auto& [c, val] : v) {
        if (c >= cols_) throw std::invalid_argument("RationalMatrix::apply_sparse: index out of range");
        for (std::size_t r = 0; r < rows_; ++r) {
            auto it = data_[r].find(c);
            if (it != data_[r].end()) acc[r] += it->second * val;
        }
    }
    SparseVec out;
    for (auto& [i, val] : acc)
        if (val != 0) out.emplace_back(i, val);
    return out;
}

void RationalMatrix::insert_block(std::size_t r0, std::size_t c0, const RationalMatrix& block) {
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (const auto& [c, v] : block.row(r)) set(r0 + r, c0 + c, v);
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
    return out;
}

} // namespace cyclo
