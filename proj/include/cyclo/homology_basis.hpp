#pragma once

#include <cstddef>
#include <vector>

#include "cyclo/matrix.hpp"

namespace cyclo {

// Homology of one node of a complex, with explicit cycle representatives so
// chain maps can be pushed down to homology.
struct HomologySpace {
    std::size_t ambient = 0;
    std::vector<SparseVec> boundaries; // echelon basis of im(d_in)
    std::vector<SparseVec> reps;       // cycles spanning a complement of the boundaries

    std::size_t dim() const { return reps.size(); }
};

// ker(d_out) / im(d_in). d_out: C -> C', d_in: C'' -> C; a 0 x dim matrix stands
// for a missing differential.
HomologySpace homology_space(const RationalMatrix& d_out, const RationalMatrix& d_in);

// Matrix of the map induced on homology by a chain map (given as a matrix on the
// ambient spaces). The image of every representative must again be a cycle in the
// target node; entry (i, j) is the coefficient of dst.reps[i] in chain_map * src.reps[j].
RationalMatrix induced_on_homology(const RationalMatrix& chain_map, const HomologySpace& src,
                                   const HomologySpace& dst);

RationalMatrix from_columns(std::size_t ambient, const std::vector<SparseVec>& cols);

} // namespace cyclo
