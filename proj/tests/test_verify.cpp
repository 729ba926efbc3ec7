#include <doctest.h>

#include "cyclo/algebra.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/linalg.hpp"
#include "cyclo/verify.hpp"

using namespace cyclo;

TEST_CASE("additivity reports") {
    const Algebra field = matrix_algebra(1);
    const auto rep = verify_additivity(field, field, 4, ComputeOptions{});
    CHECK(rep.additive);
    CHECK(rep.hc_sum == std::vector<std::size_t>{2, 0, 2, 0, 2});

    const auto rep2 = verify_additivity(dual_numbers(), matrix_algebra(2), 3, ComputeOptions{});
    CHECK(rep2.additive);
    CHECK(rep2.hh_sum == std::vector<std::size_t>{3, 1, 1, 1});

    const Algebra line(1, {"x"}, {}, std::nullopt);
    CHECK_THROWS_AS(verify_additivity(line, field, 2, ComputeOptions{}), NotUnitalError);
}

TEST_CASE("separability idempotent of M_2 is the canonical symmetric element") {
    const auto e = separability_idempotent(matrix_algebra(2));
    REQUIRE(e.has_value());
    // (1/2)(e11 (x) e11 + e12 (x) e21 + e21 (x) e12 + e22 (x) e22); index i*4+j.
    std::vector<Rational> expect(16, Rational(0));
    expect[0 * 4 + 0] = rat(1, 2);
    expect[1 * 4 + 2] = rat(1, 2);
    expect[2 * 4 + 1] = rat(1, 2);
    expect[3 * 4 + 3] = rat(1, 2);
    CHECK(e->tensor == expect);
    CHECK(is_separability_idempotent(matrix_algebra(2), *e));
}

TEST_CASE("separability across the corpus") {
    const auto ef = separability_idempotent(matrix_algebra(1));
    REQUIRE(ef.has_value());
    CHECK(ef->tensor == std::vector<Rational>{1}); // 1 (x) 1

    for (const Algebra& a : {matrix_algebra(3), truncated_convolution(CompactGroup::S1, 1).first,
                             truncated_convolution(CompactGroup::SU2, 2).first}) {
        const auto e = separability_idempotent(a);
        REQUIRE(e.has_value());
        CHECK(is_separability_idempotent(a, *e));
    }

    CHECK_FALSE(separability_idempotent(dual_numbers()).has_value());
}

TEST_CASE("canonical matrix-block solution is flip/transpose symmetric") {
    for (std::size_t n : {2u, 3u}) {
        const auto e = separability_idempotent(matrix_algebra(n));
        REQUIRE(e.has_value());
        const std::size_t d = n * n;
        auto t = [n](std::size_t x) { return (x % n) * n + x / n; }; // e_ij -> e_ji
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y)
                CHECK(e->tensor[x * d + y] == e->tensor[t(y) * d + t(x)]);
    }
}

TEST_CASE("separable implies vanishing higher Hochschild homology") {
    const auto su2 = verify_separable_vanishing(truncated_convolution(CompactGroup::SU2, 2).first,
                                                3, ComputeOptions{});
    CHECK(su2.separable);
    CHECK(su2.vanishing_above_zero);
    CHECK(su2.implication_holds);

    const auto dual = verify_separable_vanishing(dual_numbers(), 4, ComputeOptions{});
    CHECK_FALSE(dual.separable);
    CHECK(dual.hh[1] == 1); // recorded, implication vacuous
    CHECK(dual.implication_holds);

    const auto m3 = verify_separable_vanishing(matrix_algebra(3), 2, ComputeOptions{});
    CHECK(m3.separable);
    CHECK(m3.vanishing_above_zero);
}

TEST_CASE("length-2 resolution of the unitalization is exact") {
    for (const Algebra& a : {matrix_algebra(1), dual_numbers(),
                             direct_sum(matrix_algebra(2), matrix_algebra(1))}) {
        const auto rep = resolution_of_unitalization(a);
        CHECK(rep.exact);
        CHECK(rep.homology == std::array<std::size_t, 3>{1, 0, 0});
    }
    const auto big = resolution_of_unitalization(direct_sum(matrix_algebra(2), matrix_algebra(1)));
    CHECK(big.dims == std::array<std::size_t, 3>{36, 60, 25});

    // The construction needs no unit on the input.
    const Algebra line(1, {"x"}, {}, std::nullopt);
    CHECK(resolution_of_unitalization(line).exact);
}

TEST_CASE("adjoint projection: block-trace averaging") {
    const Algebra m2 = matrix_algebra(2);
    const BlockDecomposition one_block{{2}, {0}};
    const RationalMatrix p = adjoint_projection(m2, one_block);

    // P(e11) = (e11 + e22)/2, P(e12) = 0.
    std::vector<Rational> e11{1, 0, 0, 0};
    CHECK(p.apply(e11) == std::vector<Rational>{rat(1, 2), 0, 0, rat(1, 2)});
    std::vector<Rational> e12{0, 1, 0, 0};
    CHECK(p.apply(e12) == std::vector<Rational>{0, 0, 0, 0});
    CHECK(p.times(p) == p);

    auto [s1, s1b] = truncated_convolution(CompactGroup::S1, 1);
    CHECK(adjoint_projection(s1, s1b) == RationalMatrix::identity(3));

    auto [su2, su2b] = truncated_convolution(CompactGroup::SU2, 2);
    const RationalMatrix p2 = adjoint_projection(su2, su2b);
    CHECK(rank(p2) == 2);
    CHECK(rank(p2) == commutator_quotient_dim(su2));

    // ker P contains every commutator.
    for (std::size_t i = 0; i < su2.dim(); ++i)
        for (std::size_t j = 0; j < su2.dim(); ++j) {
            SparseVec comm = su2.multiply({{i, Rational(1)}}, {{j, Rational(1)}});
            for (auto& [k, v] : su2.multiply({{j, Rational(1)}}, {{i, Rational(1)}})) {
                bool merged = false;
                for (auto& [k2, v2] : comm)
                    if (k2 == k) {
                        v2 -= v;
                        merged = true;
                    }
                if (!merged) comm.emplace_back(k, -v);
            }
            std::vector<Rational> dense = to_dense(comm, su2.dim());
            for (const auto& x : p2.apply(dense)) CHECK(x == 0);
        }

    CHECK_THROWS_AS(adjoint_projection(dual_numbers(), BlockDecomposition{{1, 1}, {0, 1}}),
                    DecompositionMismatchError);
}
