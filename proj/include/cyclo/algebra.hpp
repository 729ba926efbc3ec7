#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/matrix.hpp"

namespace cyclo {

// Finite-dimensional associative algebra over Q, presented by structure constants:
// b_i * b_j = sum_k table[(i,j)][k] b_k. The unit, when present, is an explicit
// coefficient vector (it need not be a basis element).
class Algebra {
public:
    using Key = std::uint64_t; // i * dim + j

    Algebra(std::size_t dim, std::vector<std::string> labels,
            std::map<Key, SparseVec> table, std::optional<std::vector<Rational>> unit);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool is_unital() const { return unit_.has_value(); }
    const std::vector<Rational>& unit() const;
    const std::map<Key, SparseVec>& table() const { return table_; }

    // b_i * b_j as a sparse coefficient vector (empty when the product is zero).
    const SparseVec& product(std::size_t i, std::size_t j) const;

    SparseVec multiply(const SparseVec& u, const SparseVec& v) const;
    std::vector<Rational> multiply_dense(const std::vector<Rational>& u,
                                         const std::vector<Rational>& v) const;

private:
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::map<Key, SparseVec> table_;
    std::optional<std::vector<Rational>> unit_;
};

// Peter-Weyl style block data for a direct sum of matrix algebras; block i occupies
// basis indices [block_offsets[i], block_offsets[i] + block_sizes[i]^2), ordered as
// matrix units e_jk in row-major order.
struct BlockDecomposition {
    std::vector<std::size_t> block_sizes;
    std::vector<std::size_t> block_offsets;
};

struct TraceFunctional {
    std::vector<Rational> coefficients; // value on each basis element
};

struct AssociativityReport {
    bool ok = true;
    std::array<std::size_t, 3> witness = {0, 0, 0}; // failing (i, j, k) when !ok
};

struct UnitReport {
    bool has_unit = false;
    bool ok = false;
    std::size_t witness = 0; // basis index where the unit law fails
};

enum class CompactGroup { S1, SU2 };

Algebra matrix_algebra(std::size_t n);
Algebra direct_sum(const Algebra& a, const Algebra& b);
Algebra unitalization(const Algebra& a);
std::pair<Algebra, BlockDecomposition> truncated_convolution(CompactGroup group, std::size_t cutoff);

// Unitalization of the one-dimensional square-zero algebra; basis {x, 1}.
Algebra dual_numbers();

std::size_t commutator_quotient_dim(const Algebra& a, bool mod_check = true);
std::vector<TraceFunctional> trace_space_basis(const Algebra& a);
AssociativityReport check_associative(const Algebra& a);
UnitReport check_unit(const Algebra& a);
bool is_trace(const Algebra& a, const TraceFunctional& tau);

// Throws DecompositionMismatchError unless `a` really is the direct sum of matrix
// algebras described by `blocks`, with the documented basis ordering.
void validate_blocks(const Algebra& a, const BlockDecomposition& blocks);

// Content hash over the canonical presentation; cache key and RNG seed material.
std::uint64_t content_hash(const Algebra& a);

} // namespace cyclo
