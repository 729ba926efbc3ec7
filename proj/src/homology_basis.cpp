#include "cyclo/homology_basis.hpp"

#include <map>
#include <stdexcept>

#include "cyclo/errors.hpp"
#include "cyclo/linalg.hpp"

namespace cyclo {

namespace {

// Reduces v against an echelon set keyed by leading index; returns the remainder.
SparseVec reduce_against(SparseVec v, const std::map<std::size_t, SparseVec>& echelon) {
    while (!v.empty()) {
        auto it = echelon.find(v.front().first);
        if (it == echelon.end()) return v;
        const Rational factor = v.front().second / it->second.front().second;
        std::map<std::size_t, Rational> acc;
        for (const auto& [i, c] : v) acc[i] = c;
        for (const auto& [i, c] : it->second) {
            auto [jt, inserted] = acc.try_emplace(i, -factor * c);
            if (!inserted) jt->second -= factor * c;
        }
        v.clear();
        for (auto& [i, c] : acc)
            if (c != 0) v.emplace_back(i, std::move(c));
    }
    return v;
}

} // namespace

RationalMatrix from_columns(std::size_t ambient, const std::vector<SparseVec>& cols) {
    RationalMatrix m(ambient, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, c] : cols[j]) m.set(i, j, c);
    return m;
}

HomologySpace homology_space(const RationalMatrix& d_out, const RationalMatrix& d_in) {
    if (d_out.cols() != d_in.rows())
        throw DimensionMismatchError("homology_space: differentials do not meet in one node");
    HomologySpace hs;
    hs.ambient = d_out.cols();
    hs.boundaries = column_space_basis(d_in);

    std::map<std::size_t, SparseVec> echelon;
    for (const auto& b : hs.boundaries) echelon.emplace(b.front().first, b);

    for (auto& z : kernel_basis_sparse(d_out)) {
        SparseVec rem = reduce_against(z, echelon);
        if (rem.empty()) continue;
        hs.reps.push_back(std::move(z));
        echelon.emplace(rem.front().first, std::move(rem));
    }
    return hs;
}

RationalMatrix induced_on_homology(const RationalMatrix& chain_map, const HomologySpace& src,
                                   const HomologySpace& dst) {
    if (chain_map.cols() != src.ambient || chain_map.rows() != dst.ambient)
        throw DimensionMismatchError("induced_on_homology: chain map shape mismatch");
    std::vector<SparseVec> images;
    images.reserve(src.reps.size());
    for (const auto& rep : src.reps) images.push_back(chain_map.apply_sparse(rep));

    std::vector<SparseVec> basis = dst.boundaries;
    basis.insert(basis.end(), dst.reps.begin(), dst.reps.end());
    const RationalMatrix system = from_columns(dst.ambient, basis);
    const RationalMatrix rhs = from_columns(dst.ambient, images);
    auto sol = solve_multi(system, rhs);
    if (!sol)
        throw MathError("induced_on_homology: image of a representative is not a cycle class");
    RationalMatrix out(dst.reps.size(), src.reps.size());
    for (std::size_t i = 0; i < dst.reps.size(); ++i)
        for (std::size_t j = 0; j < src.reps.size(); ++j)
            out.set(i, j, sol->at(dst.boundaries.size() + i, j));
    return out;
}

} // namespace cyclo
