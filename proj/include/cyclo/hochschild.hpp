#pragma once

#include <cstddef>
#include <vector>

#include "cyclo/algebra.hpp"
#include "cyclo/matrix.hpp"
#include "cyclo/reports.hpp"

namespace cyclo {

class DiffCache;

struct ComputeOptions {
    bool normalized = true;
    bool mod_check = true;
    bool force_size = false;
    std::size_t size_limit = 1'000'000; // tensor-basis elements per degree
    DiffCache* cache = nullptr;         // optional on-disk differential cache
};

struct ChainComplex {
    std::size_t max_degree = 0;
    std::vector<std::size_t> dims;              // 0..max_degree
    std::vector<RationalMatrix> differentials;  // [n]: C_n -> C_{n-1}; [0] is an empty placeholder
};

// Basis bookkeeping for the (normalized) Hochschild chains of a unital algebra.
// Normalized chains are A (x) Abar^(x)n with Abar = A / (Q . unit); the reduced basis
// drops the first basis index carrying a nonzero unit coefficient.
class ChainBasis {
public:
    ChainBasis(const Algebra& a, bool normalized); // throws NotUnitalError

    const Algebra& algebra() const { return a_; }
    bool normalized() const { return normalized_; }
    std::size_t reduced_dim() const { return reduced_.size(); }
    std::size_t chain_dim(std::size_t degree) const;

    // Class of a coefficient vector on A in the reduced-factor basis.
    SparseVec reduce_class(const SparseVec& full) const;
    std::size_t lift(std::size_t reduced_index) const { return reduced_[reduced_index]; }

    RationalMatrix b_matrix(std::size_t n) const; // C_n -> C_{n-1}, n >= 1
    RationalMatrix B_matrix(std::size_t n) const; // C_n -> C_{n+1}, normalized chains only

private:
    const Algebra& a_;
    bool normalized_;
    std::vector<std::size_t> reduced_;              // reduced index -> basis index of A
    std::size_t dropped_ = 0;                        // basis index folded into the others
    std::vector<SparseVec> reduced_of_basis_;        // class of each basis element
    std::vector<std::vector<SparseVec>> red_prod_;   // reduced class of b_i b_j (full indices)
};

ChainComplex hochschild_complex(const Algebra& a, std::size_t max_degree,
                                const ComputeOptions& opts = {});
HomologyReport hh_dims(const Algebra& a, std::size_t cutoff, const ComputeOptions& opts = {});
HomologyReport hh_cohomology_dims(const Algebra& a, std::size_t cutoff,
                                  const ComputeOptions& opts = {});

} // namespace cyclo
