#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclo/algebra.hpp"
#include "cyclo/hochschild.hpp"
#include "cyclo/reports.hpp"

namespace cyclo {

struct AdditivityReport {
    std::size_t cutoff = 0;
    std::vector<std::size_t> hh_a, hh_b, hh_sum;
    std::vector<std::size_t> hc_a, hc_b, hc_sum;
    bool additive = false; // entrywise sums match on every reported degree
};

AdditivityReport verify_additivity(const Algebra& a, const Algebra& b, std::size_t cutoff,
                                   const ComputeOptions& opts = {});

// Element of A (x) A; index i*dim + j stands for b_i (x) b_j.
struct SeparabilityIdempotent {
    std::vector<Rational> tensor;
};

// Solves m(e) = 1, (a (x) 1) e = e (1 (x) a) by linear algebra; empty when the
// system is inconsistent (the algebra is not separable). Among all solutions the
// minimum-norm one is returned, which on sums of matrix blocks is the canonical
// sum_i (1/n_i) sum_jk e_jk (x) e_kj.
std::optional<SeparabilityIdempotent> separability_idempotent(const Algebra& a);

bool is_separability_idempotent(const Algebra& a, const SeparabilityIdempotent& e);

struct SeparableVanishingReport {
    bool separable = false;
    std::vector<std::size_t> hh;     // dims 0..cutoff
    bool vanishing_above_zero = false;
    bool implication_holds = false;  // separable => HH vanishes in degrees >= 1
};

SeparableVanishingReport verify_separable_vanishing(const Algebra& a, std::size_t cutoff,
                                                    const ComputeOptions& opts = {});

// Length-2 resolution of the trivial module built from two copies of A -> A+ -> Q:
//   Q <- A+ (x) A+ <- A (x) A+ (+) A+ (x) A <- A (x) A <- 0
// with d2(x,y) = (x (x) iy, -ix (x) y), d1(x (x) v, u (x) y) = ix (x) v + u (x) iy.
ResolutionReport resolution_of_unitalization(const Algebra& a, bool mod_check = true);

// Block-trace averaging projection: each block maps to (trace/n_i) times the block
// identity. Satisfies P^2 = P, image = span of block identities, ker P contains [A,A].
RationalMatrix adjoint_projection(const Algebra& a, const BlockDecomposition& blocks);

} // namespace cyclo
