#pragma once

#include <cstddef>
#include <vector>

#include "cyclo/algebra.hpp"
#include "cyclo/hochschild.hpp"
#include "cyclo/matrix.hpp"
#include "cyclo/reports.hpp"

namespace cyclo {

// Normalized Hochschild chains with both differentials; b lowers and B raises
// the degree, and b^2 = B^2 = bB + Bb = 0 hold as exact matrix identities.
struct MixedComplex {
    std::size_t max_degree = 0;
    std::vector<std::size_t> dims;
    std::vector<RationalMatrix> b; // [n]: C_n -> C_{n-1} for n = 1..max_degree; [0] placeholder
    std::vector<RationalMatrix> B; // [n]: C_n -> C_{n+1} for n = 0..max_degree-1
};

MixedComplex mixed_complex(const Algebra& a, std::size_t max_degree, const ComputeOptions& opts = {});

// Tot_n = (+)_{p >= 0} C_{n-2p} with differential b + B; column p of Tot_n starts
// at offsets[n][p].
struct TotalComplex {
    std::size_t max_degree = 0;
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::size_t>> offsets;
    std::vector<RationalMatrix> d; // [n]: Tot_n -> Tot_{n-1}; [0] placeholder
};

TotalComplex total_complex(const MixedComplex& mc);

// Chain-level periodicity operator: kills the C_n column and shifts the rest,
// Tot_n -> Tot_{n-2}. Commutes with the total differential; asserted at build.
RationalMatrix s_map(const TotalComplex& tc, std::size_t degree);

// Inclusion of the Hochschild column: C_n -> Tot_n.
RationalMatrix i_map(const TotalComplex& tc, std::size_t degree);

HomologyReport hc_dims(const Algebra& a, std::size_t cutoff, const ComputeOptions& opts = {});
HomologyReport hc_cohomology_dims(const Algebra& a, std::size_t cutoff,
                                  const ComputeOptions& opts = {});

SBICertificate sbi_report(const Algebra& a, std::size_t cutoff, const ComputeOptions& opts = {});

// Periodic cyclic dims by S-stabilization; the certificate carries the evidence
// and the report dims repeat (HP_0, HP_1) periodically. Inconclusive runs report
// iterated-S image ranks with every degree flagged unreliable.
HomologyReport hp_dims(const Algebra& a, std::size_t cutoff, const ComputeOptions& opts = {});
HomologyReport hp_cohomology_dims(const Algebra& a, std::size_t cutoff,
                                  const ComputeOptions& opts = {});

} // namespace cyclo
