#include <doctest.h>

#include "cyclo/errors.hpp"
#include "cyclo/growth.hpp"

using namespace cyclo;

namespace {

using K = GrowthClassKind;
using M = Membership;

ClassificationTable table_of(const std::string& expr, Weight w = Weight::One) {
    return classify(parse_sequence(expr), w);
}

} // namespace

TEST_CASE("classification of the headline sequences") {
    const auto cubes = table_of("n^3");
    CHECK(cubes.finitely_supported == M::No);
    CHECK(cubes.polynomial_growth == M::Yes);
    CHECK(cubes.dim_weighted_summable == M::No);
    CHECK(cubes.fin_gen_subgroup == M::Yes); // integer values
    CHECK(cubes.arbitrary == M::Yes);

    const auto decay = table_of("1/(n+1)^2");
    CHECK(decay.polynomial_growth == M::Yes);
    CHECK(decay.dim_weighted_summable == M::Yes);
    CHECK(decay.fin_gen_subgroup == M::Undecided);

    const auto decay_dim = table_of("1/(n+1)^2", Weight::Dim);
    CHECK(decay_dim.dim_weighted_summable == M::No); // sum n/(n+1)^2 diverges

    const auto powers = table_of("2^n");
    CHECK(powers.polynomial_growth == M::No);
    CHECK(powers.dim_weighted_summable == M::No);
    CHECK(powers.fin_gen_subgroup == M::Yes); // entries in Z
    CHECK(powers.arbitrary == M::Yes);

    const auto ones = table_of("1");
    CHECK(ones.finitely_supported == M::No);
    CHECK(ones.polynomial_growth == M::Yes);
    CHECK(ones.dim_weighted_summable == M::No);

    const auto finite = classify(parse_support("0=1,3=2/5"), Weight::One);
    CHECK(finite.finitely_supported == M::Yes);
    CHECK(finite.polynomial_growth == M::Yes);
    CHECK(finite.dim_weighted_summable == M::Yes);
    CHECK(finite.fin_gen_subgroup == M::Yes);
}

TEST_CASE("classification of exponential decay and factorials") {
    const auto half = table_of("(1/2)^n");
    CHECK(half.polynomial_growth == M::Yes);
    CHECK(half.dim_weighted_summable == M::Yes);
    CHECK(half.fin_gen_subgroup == M::Undecided); // dyadic entries, not decided

    const auto fact = table_of("fact(n)");
    CHECK(fact.polynomial_growth == M::No);
    CHECK(fact.dim_weighted_summable == M::No);
    CHECK(fact.fin_gen_subgroup == M::Yes);

    const auto inv_fact = table_of("fact(n)^-1");
    CHECK(inv_fact.polynomial_growth == M::Yes);
    CHECK(inv_fact.dim_weighted_summable == M::Yes);
    CHECK(inv_fact.fin_gen_subgroup == M::Undecided);

    // Integer-valued polynomial with non-integer coefficients.
    const auto binom = table_of("(n^2+n)/2");
    CHECK(binom.fin_gen_subgroup == M::Yes);

    const auto zero = table_of("0");
    CHECK(zero.finitely_supported == M::Yes);
}

TEST_CASE("polynomial growth and summability separate in both weightings") {
    // a_n = n grows polynomially but is never summable; 1/(n+1)^2 decays but the
    // classes stay incomparable in the lattice.
    for (Weight w : {Weight::One, Weight::Dim}) {
        const auto linear = table_of("n", w);
        CHECK(linear.polynomial_growth == M::Yes);
        CHECK(linear.dim_weighted_summable == M::No);
    }
    CHECK_FALSE(strictly_below(K::PolynomialGrowth, K::DimWeightedSummable));
    CHECK_FALSE(strictly_below(K::DimWeightedSummable, K::PolynomialGrowth));
}

TEST_CASE("classify is monotone along the lattice") {
    for (const char* expr : {"n^3", "1/(n+1)^2", "2^n", "1", "(1/2)^n", "fact(n)", "fact(n)^-1"}) {
        for (Weight w : {Weight::One, Weight::Dim}) {
            const auto t = table_of(expr, w);
            for (K lower : {K::FinitelySupported, K::PolynomialGrowth, K::DimWeightedSummable,
                            K::FinGenSubgroupEntries}) {
                for (K upper : {K::PolynomialGrowth, K::DimWeightedSummable,
                                K::FinGenSubgroupEntries, K::Arbitrary}) {
                    if (!strictly_below(lower, upper)) continue;
                    if (t.of(lower) == M::Yes) CHECK(t.of(upper) == M::Yes);
                }
            }
        }
    }
}

TEST_CASE("non-canonical symbolic input is rejected") {
    GrowthSequence seq;
    seq.p = Poly::variable() + Poly::constant(1);
    seq.q = seq.p; // gcd nontrivial
    CHECK_THROWS_AS(classify(seq, Weight::One), NonCanonicalError);
    // symbolic_sequence canonicalizes the same data.
    const GrowthSequence fixed = symbolic_sequence(seq.p, seq.q, 1, 0);
    CHECK_NOTHROW(classify(fixed, Weight::One));
}

TEST_CASE("denominators vanishing on N are rejected") {
    const Poly n_minus_2 = Poly::variable() - Poly::constant(2);
    CHECK_THROWS_AS(symbolic_sequence(Poly::constant(1), n_minus_2, 1, 0), InputError);
}

TEST_CASE("inclusion witnesses exist and round-trip") {
    const std::vector<std::pair<K, K>> pairs = {
        {K::FinitelySupported, K::PolynomialGrowth},
        {K::FinitelySupported, K::DimWeightedSummable},
        {K::FinitelySupported, K::FinGenSubgroupEntries},
        {K::FinitelySupported, K::Arbitrary},
        {K::PolynomialGrowth, K::Arbitrary},
        {K::DimWeightedSummable, K::Arbitrary},
    };
    for (Weight w : {Weight::One, Weight::Dim}) {
        for (const auto& [lo, hi] : pairs) {
            const GrowthSequence seq = inclusion_witness(lo, hi, w);
            const auto t = classify(seq, w);
            CHECK(t.of(hi) == M::Yes);
            CHECK(t.of(lo) == M::No);
        }
    }
}

TEST_CASE("incomparable and undecidable witness requests") {
    CHECK_THROWS_AS(inclusion_witness(K::PolynomialGrowth, K::DimWeightedSummable, Weight::One),
                    NotComparableError);
    CHECK_THROWS_AS(inclusion_witness(K::Arbitrary, K::FinitelySupported, Weight::One),
                    NotComparableError);
    CHECK_THROWS_AS(inclusion_witness(K::PolynomialGrowth, K::PolynomialGrowth, Weight::One),
                    NotComparableError);
    CHECK_THROWS_AS(inclusion_witness(K::FinGenSubgroupEntries, K::Arbitrary, Weight::One),
                    NoWitnessError);
}

TEST_CASE("sequence values evaluate correctly") {
    CHECK(parse_sequence("n^3").value_at(4) == 64);
    CHECK(parse_sequence("(1/2)^n").value_at(3) == rat(1, 8));
    CHECK(parse_sequence("fact(n)").value_at(4) == 24);
    CHECK(parse_sequence("2^n * n").value_at(3) == 24);
    const GrowthSequence fin = parse_support("0=1,3=2/5");
    CHECK(fin.value_at(0) == 1);
    CHECK(fin.value_at(1) == 0);
    CHECK(fin.value_at(3) == rat(2, 5));
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_sequence("n^n"), InputError);
    CHECK_THROWS_AS(parse_sequence("2^"), InputError);
    CHECK_THROWS_AS(parse_sequence("1/0"), InputError);
    CHECK_THROWS_AS(parse_sequence("(-2)^n"), InputError);
    CHECK_THROWS_AS(parse_sequence("1 +"), InputError);
    CHECK_THROWS_AS(parse_support("0:1"), InputError);
}

TEST_CASE("limits-vs-products staircase certificate") {
    const auto cert = lim_prod_demo(3);
    CHECK(cert.stages == 3);
    CHECK(cert.support_bound == std::vector<std::size_t>{1, 2, 3});
    CHECK(cert.first_uncovered == std::vector<std::size_t>{2, 3, 4});
    CHECK(cert.obstruction_at_every_stage);

    const auto one = lim_prod_demo(1);
    CHECK(one.support_bound == std::vector<std::size_t>{1});
    CHECK(one.first_uncovered == std::vector<std::size_t>{2});

    CHECK(lim_prod_demo(10).support_bound.back() == 10);
    CHECK_THROWS_AS(lim_prod_demo(0), InputError);
}
