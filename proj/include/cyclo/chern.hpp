#pragma once

#include <cstddef>
#include <vector>

#include "cyclo/algebra.hpp"
#include "cyclo/hochschild.hpp"
#include "cyclo/matrix.hpp"

namespace cyclo {

struct Idempotent {
    std::vector<Rational> coeffs; // element of A with e*e = e
};

// Even (b+B)-cycle in the normalized mixed complex. components[k] holds ch_{2k}
// as a dense coefficient vector on the degree-2k chain basis.
struct EvenCycle {
    std::size_t max_even_degree = 0;
    std::vector<std::vector<Rational>> components;
};

// ch_0 = e and ch_{2n} = (-1)^n (2n)!/n! (e - 1/2) (x) ebar^(x)2n for n >= 1;
// closedness b(ch_{2n}) + B(ch_{2n-2}) = 0 is asserted exactly at construction.
EvenCycle chern_character(const Algebra& a, const Idempotent& e, std::size_t max_even_degree,
                          const ComputeOptions& opts = {});

// Pairing of a trace with an even cycle. A trace is a degree-0 cocycle killed by
// the transpose of B, so only the degree-0 component contributes.
Rational pair_trace(const Algebra& a, const TraceFunctional& tau, const EvenCycle& c);

// Pairing matrix between the normalized block traces (rows) and the block minimal
// idempotents (columns); the identity matrix certifies the finite Chern shadow.
RationalMatrix chern_matrix(const Algebra& a, const BlockDecomposition& blocks);

} // namespace cyclo
