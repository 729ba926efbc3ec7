#pragma once

// Test-only oracle: an independent dense-arithmetic implementation of the
// normalized chain complexes and their homology dimensions. Everything here is
// deliberately written from first principles — dense structure constants,
// textbook division-based elimination, recursive tensor expansion — so it shares
// no code path with the library it cross-checks.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace oracle {

using Rat = mpq_class;
using Mat = std::vector<std::vector<Rat>>; // dense, row major

struct Alg {
    std::size_t dim = 0;
    std::vector<std::vector<std::vector<Rat>>> mult; // mult[i][j][k]
    std::vector<Rat> unit;
};

Alg field();
Alg matrix_algebra(std::size_t n);
Alg direct_sum(const Alg& a, const Alg& b);
Alg dual_numbers();
Alg s1_trunc(std::size_t cutoff);
Alg su2_trunc(std::size_t cutoff);

std::size_t rank(Mat m);

std::vector<std::size_t> hh_dims(const Alg& a, std::size_t cutoff);
std::vector<std::size_t> hc_dims(const Alg& a, std::size_t cutoff);

// Rank of the map induced by the periodicity operator on cyclic homology,
// HC_deg -> HC_{deg-2}.
std::size_t induced_s_rank(const Alg& a, std::size_t deg);

} // namespace oracle
