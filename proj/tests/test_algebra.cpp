#include <doctest.h>

#include "cyclo/algebra.hpp"
#include "cyclo/errors.hpp"

using namespace cyclo;

namespace {

SparseVec bv(std::size_t i) { return {{i, Rational(1)}}; }

std::vector<const Algebra*> corpus(std::vector<Algebra>& store) {
    store.clear();
    store.reserve(8);
    store.push_back(matrix_algebra(1));
    store.push_back(matrix_algebra(2));
    store.push_back(matrix_algebra(3));
    store.push_back(dual_numbers());
    store.push_back(truncated_convolution(CompactGroup::S1, 1).first);
    store.push_back(truncated_convolution(CompactGroup::S1, 2).first);
    store.push_back(truncated_convolution(CompactGroup::SU2, 2).first);
    store.push_back(direct_sum(dual_numbers(), matrix_algebra(2)));
    std::vector<const Algebra*> out;
    for (const auto& a : store) out.push_back(&a);
    return out;
}

} // namespace

TEST_CASE("matrix_algebra basics") {
    const Algebra f = matrix_algebra(1);
    CHECK(f.dim() == 1);
    CHECK(f.is_unital());

    const Algebra m2 = matrix_algebra(2);
    CHECK(m2.dim() == 4);
    // basis order e11, e12, e21, e22
    CHECK(m2.multiply(bv(1), bv(2)) == bv(0)); // e12 e21 = e11
    CHECK(m2.multiply(bv(1), bv(1)).empty());  // e12 e12 = 0
    CHECK(check_associative(matrix_algebra(3)).ok);

    CHECK_THROWS_AS(matrix_algebra(0), InputError);
}

TEST_CASE("direct sum: block products, units, associativity") {
    const Algebra two = direct_sum(matrix_algebra(1), matrix_algebra(1));
    CHECK(two.dim() == 2);
    CHECK(two.multiply(bv(0), bv(1)).empty());
    CHECK(two.is_unital());
    CHECK(two.unit() == std::vector<Rational>{1, 1});

    const Algebra five = direct_sum(matrix_algebra(2), matrix_algebra(1));
    CHECK(five.dim() == 5);
    CHECK(five.is_unital());
    CHECK(check_associative(five).ok);
}

TEST_CASE("unitalization") {
    const Algebra fplus = unitalization(matrix_algebra(1));
    CHECK(fplus.dim() == 2);
    CHECK(check_unit(fplus).ok);

    const Algebra m2plus = unitalization(matrix_algebra(2));
    CHECK(m2plus.dim() == 5);
    CHECK(check_unit(m2plus).ok);
    CHECK(m2plus.unit() != std::vector<Rational>{1, 0, 0, 1, 0});

    const Algebra dual = dual_numbers(); // (x^2 = 0)^+, basis {x, 1}
    CHECK(dual.dim() == 2);
    CHECK(dual.multiply(bv(0), bv(0)).empty()); // x * x = 0
    CHECK(dual.multiply(bv(1), bv(0)) == bv(0));
    CHECK(check_associative(dual).ok);
    CHECK(check_unit(dual).ok);
}

TEST_CASE("truncated convolution algebras") {
    auto [s1, s1b] = truncated_convolution(CompactGroup::S1, 1);
    CHECK(s1.dim() == 3);
    CHECK(s1b.block_sizes == std::vector<std::size_t>{1, 1, 1});
    CHECK(s1.multiply(bv(0), bv(0)) == bv(0));
    CHECK(s1.multiply(bv(0), bv(1)).empty());

    auto [su2, su2b] = truncated_convolution(CompactGroup::SU2, 2);
    CHECK(su2.dim() == 5);
    CHECK(su2b.block_sizes == std::vector<std::size_t>{1, 2});
    CHECK(su2b.block_offsets == std::vector<std::size_t>{0, 1});

    CHECK(truncated_convolution(CompactGroup::SU2, 3).first.dim() == 14);
    CHECK_THROWS_AS(truncated_convolution(CompactGroup::SU2, 0), InputError);
    CHECK(truncated_convolution(CompactGroup::S1, 0).first.dim() == 1);
}

TEST_CASE("commutator quotient dimensions") {
    CHECK(commutator_quotient_dim(matrix_algebra(3)) == 1);
    CHECK(commutator_quotient_dim(truncated_convolution(CompactGroup::SU2, 2).first) == 2);
    CHECK(commutator_quotient_dim(dual_numbers()) == 2); // commutative
    CHECK(commutator_quotient_dim(truncated_convolution(CompactGroup::S1, 2).first) == 5);
}

TEST_CASE("trace space bases") {
    const auto m2_traces = trace_space_basis(matrix_algebra(2));
    REQUIRE(m2_traces.size() == 1);
    // Proportional to the matrix trace (1, 0, 0, 1).
    const auto& t = m2_traces[0].coefficients;
    CHECK(t[1] == 0);
    CHECK(t[2] == 0);
    CHECK(t[0] == t[3]);
    CHECK(t[0] != 0);
    CHECK(is_trace(matrix_algebra(2), m2_traces[0]));

    CHECK(trace_space_basis(truncated_convolution(CompactGroup::S1, 1).first).size() == 3);
    CHECK(trace_space_basis(dual_numbers()).size() == 2);
}

TEST_CASE("trace count equals commutator quotient dimension across the corpus") {
    std::vector<Algebra> store;
    for (const Algebra* a : corpus(store))
        CHECK(trace_space_basis(*a).size() == commutator_quotient_dim(*a));
}

TEST_CASE("every constructor output is associative; corruption is caught with a witness") {
    std::vector<Algebra> store;
    for (const Algebra* a : corpus(store)) CHECK(check_associative(*a).ok);

    // Corrupt M_2: declare e12 * e21 = e22 instead of e11.
    const Algebra m2 = matrix_algebra(2);
    auto table = m2.table();
    table[1 * 4 + 2] = bv(3);
    const Algebra broken(4, m2.labels(), std::move(table), m2.unit());
    const auto rep = check_associative(broken);
    CHECK_FALSE(rep.ok);
    // The witness triple really fails.
    const auto [i, j, k] = rep.witness;
    const SparseVec left = broken.multiply(broken.multiply(bv(i), bv(j)), bv(k));
    const SparseVec right = broken.multiply(bv(i), broken.multiply(bv(j), bv(k)));
    CHECK(left != right);
}

TEST_CASE("unit validation catches a wrong unit vector") {
    const Algebra m2 = matrix_algebra(2);
    const Algebra wrong(4, m2.labels(), m2.table(), std::vector<Rational>{1, 0, 0, 0});
    const auto rep = check_unit(wrong);
    CHECK(rep.has_unit);
    CHECK_FALSE(rep.ok);
}

TEST_CASE("additivity of the commutator quotient under direct sums") {
    const Algebra a = matrix_algebra(2);
    const Algebra b = dual_numbers();
    CHECK(commutator_quotient_dim(direct_sum(a, b)) ==
          commutator_quotient_dim(a) + commutator_quotient_dim(b));
}

TEST_CASE("block validation") {
    auto [su2, blocks] = truncated_convolution(CompactGroup::SU2, 2);
    CHECK_NOTHROW(validate_blocks(su2, blocks));

    BlockDecomposition wrong{{1, 1}, {0, 1}};
    CHECK_THROWS_AS(validate_blocks(dual_numbers(), wrong), DecompositionMismatchError);
    BlockDecomposition short_blocks{{1}, {0}};
    CHECK_THROWS_AS(validate_blocks(su2, short_blocks), DecompositionMismatchError);
}

TEST_CASE("construction rejects malformed input") {
    CHECK_THROWS_AS(Algebra(0, {}, {}, std::nullopt), InputError);
    std::map<Algebra::Key, SparseVec> bad_index{{0, {{5, Rational(1)}}}};
    CHECK_THROWS_AS(Algebra(2, {}, std::move(bad_index), std::nullopt), InputError);
    std::map<Algebra::Key, SparseVec> zero_coeff{{0, {{0, Rational(0)}}}};
    CHECK_THROWS_AS(Algebra(2, {}, std::move(zero_coeff), std::nullopt), InputError);
    CHECK_THROWS_AS(Algebra(2, {}, {}, std::vector<Rational>{1}), InputError);
}

TEST_CASE("content hash distinguishes algebras and is stable") {
    const Algebra a = matrix_algebra(2);
    const Algebra b = matrix_algebra(3);
    CHECK(content_hash(a) == content_hash(matrix_algebra(2)));
    CHECK(content_hash(a) != content_hash(b));
}
