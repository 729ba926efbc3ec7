#include <doctest.h>

#include "cyclo/algebra.hpp"
#include "cyclo/chern.hpp"
#include "cyclo/errors.hpp"

using namespace cyclo;

namespace {

Idempotent unit_vector_idempotent(std::size_t dim, std::size_t index) {
    Idempotent e;
    e.coeffs.assign(dim, Rational(0));
    e.coeffs[index] = 1;
    return e;
}

} // namespace

TEST_CASE("field: the unit idempotent has vanishing higher components") {
    const Algebra field = matrix_algebra(1);
    const EvenCycle ch = chern_character(field, Idempotent{{Rational(1)}}, 4, ComputeOptions{});
    REQUIRE(ch.components.size() == 3);
    CHECK(ch.components[0] == std::vector<Rational>{1});
    CHECK(ch.components[1].empty()); // normalized chains vanish above degree 0
    CHECK(ch.components[2].empty());
}

TEST_CASE("M_2: closedness holds exactly and ch_2 has the expected entries") {
    const Algebra m2 = matrix_algebra(2);
    const EvenCycle ch = chern_character(m2, unit_vector_idempotent(4, 0), 4, ComputeOptions{});
    REQUIRE(ch.components.size() == 3);
    // ch_2 = -2 (e11 - 1/2) (x) ebar (x) ebar with ebar = -[e22]; entries sit at
    // reduced word (2, 2), i.e. offset 8 within each 9-block.
    const auto& c2 = ch.components[1];
    REQUIRE(c2.size() == 4 * 9);
    CHECK(c2[0 * 9 + 8] == -1);
    CHECK(c2[3 * 9 + 8] == 1);
    std::size_t nonzero = 0;
    for (const auto& v : c2)
        if (v != 0) ++nonzero;
    CHECK(nonzero == 2);
}

TEST_CASE("zero and invalid idempotents") {
    const Algebra m2 = matrix_algebra(2);
    const EvenCycle zero = chern_character(m2, Idempotent{{0, 0, 0, 0}}, 4, ComputeOptions{});
    for (const auto& comp : zero.components)
        for (const auto& v : comp) CHECK(v == 0);

    Idempotent bad;
    bad.coeffs = {Rational(2), 0, 0, 0}; // (2 e11)^2 = 4 e11
    CHECK_THROWS_AS(chern_character(m2, bad, 2, ComputeOptions{}), NotIdempotentError);
    CHECK_THROWS_AS(chern_character(m2, unit_vector_idempotent(4, 0), 3, ComputeOptions{}),
                    InputError); // odd top degree
}

TEST_CASE("pairing with traces evaluates on the degree-0 component") {
    const Algebra m2 = matrix_algebra(2);
    const TraceFunctional tr{{1, 0, 0, 1}};
    CHECK(pair_trace(m2, tr, chern_character(m2, unit_vector_idempotent(4, 0), 4, ComputeOptions{})) ==
          1);
    Idempotent unit{{1, 0, 0, 1}};
    CHECK(pair_trace(m2, tr, chern_character(m2, unit, 4, ComputeOptions{})) == 2);
    CHECK(pair_trace(m2, tr, chern_character(m2, Idempotent{{0, 0, 0, 0}}, 4, ComputeOptions{})) ==
          0);

    const TraceFunctional not_trace{{1, 0, 0, 2}};
    CHECK_THROWS_AS(
        pair_trace(m2, not_trace, chern_character(m2, unit, 2, ComputeOptions{})),
        NotATraceError);
}

TEST_CASE("chern matrices are identities on the block corpus") {
    auto [s1, s1b] = truncated_convolution(CompactGroup::S1, 1);
    CHECK(chern_matrix(s1, s1b) == RationalMatrix::identity(3));

    auto [su2, su2b] = truncated_convolution(CompactGroup::SU2, 2);
    CHECK(chern_matrix(su2, su2b) == RationalMatrix::identity(2));

    const BlockDecomposition m2_blocks{{2}, {0}};
    CHECK(chern_matrix(matrix_algebra(2), m2_blocks) == RationalMatrix::identity(1));
}

TEST_CASE("pairings are invariant under block-basis conjugation") {
    // u = e12 + e21 swaps the two block basis vectors; u e11 u^{-1} = e22.
    const Algebra m2 = matrix_algebra(2);
    const TraceFunctional tr{{1, 0, 0, 1}};
    const Rational lhs =
        pair_trace(m2, tr, chern_character(m2, unit_vector_idempotent(4, 0), 4, ComputeOptions{}));
    const Rational rhs =
        pair_trace(m2, tr, chern_character(m2, unit_vector_idempotent(4, 3), 4, ComputeOptions{}));
    CHECK(lhs == rhs);
}
