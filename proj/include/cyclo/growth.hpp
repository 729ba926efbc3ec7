#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cyclo/rational.hpp"

namespace cyclo {

// Polynomial over Q in one variable; coeffs[i] multiplies n^i, no trailing zeros.
struct Poly {
    std::vector<Rational> coeffs;

    static Poly constant(const Rational& c);
    static Poly variable();
    bool is_zero() const { return coeffs.empty(); }
    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    Rational eval(const Rational& x) const;
    void trim();

    bool operator==(const Poly&) const = default;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b); // monic gcd
std::string poly_to_string(const Poly& p);

// Symbolic family a_n = p(n)/q(n) * r^n * (n!)^s over the irrep index n in N,
// or an explicit finitely supported list. Integer-indexed families (the circle
// case) are folded to N by |n|, multiplicity two off zero; every class below is
// symmetric under the fold, so the classifier works on the folded index.
struct GrowthSequence {
    bool finite_support = false;
    std::vector<std::pair<std::size_t, Rational>> support; // sorted, nonzero values
    Poly p, q;
    Rational r = 1; // nonnegative
    long s = 0;

    Rational value_at(std::size_t n) const;
    std::string to_string() const;
};

GrowthSequence finite_sequence(std::vector<std::pair<std::size_t, Rational>> support);
// Canonicalizes (divides out gcd(p, q), normalizes signs); throws InputError when
// q vanishes somewhere on N or r < 0.
GrowthSequence symbolic_sequence(Poly p, Poly q, Rational r, long s);

enum class GrowthClassKind {
    FinitelySupported,
    PolynomialGrowth,
    DimWeightedSummable,
    FinGenSubgroupEntries,
    Arbitrary
};

std::string growth_class_name(GrowthClassKind k);
GrowthClassKind growth_class_from_name(const std::string& name);

enum class Weight { One, Dim }; // summability weight 1 or n

enum class Membership { Yes, No, Undecided };

struct ClassificationTable {
    Weight weight = Weight::One;
    Membership finitely_supported = Membership::No;
    Membership polynomial_growth = Membership::No;
    Membership dim_weighted_summable = Membership::No;
    Membership fin_gen_subgroup = Membership::Undecided;
    Membership arbitrary = Membership::Yes;

    Membership of(GrowthClassKind k) const;
};

// Decides the five memberships by symbolic rules; throws NonCanonicalError when
// gcd(p, q) is nontrivial. FinGenSubgroupEntries is decided only for sequences
// established to be eventually integer-valued; otherwise Undecided.
ClassificationTable classify(const GrowthSequence& seq, Weight weight);

// True when lower sits strictly below upper in the class lattice.
bool strictly_below(GrowthClassKind lower, GrowthClassKind upper);

// A sequence in upper but (decidably) not in lower; classify confirms the split.
// Throws NotComparableError for incomparable or equal pairs, NoWitnessError for
// (FinGenSubgroupEntries, Arbitrary) where no decided witness can exist.
GrowthSequence inclusion_witness(GrowthClassKind lower, GrowthClassKind upper, Weight weight);

// Staircase system X_{j,m} = Q for m >= j, else 0: colimit-of-products elements
// have support bounded by their stage, so the all-ones element of the
// product-of-colimits is never attained.
struct LimProdCertificate {
    std::size_t stages = 0;
    std::vector<std::size_t> support_bound;   // per stage m = 1..stages: bound m
    std::vector<std::size_t> first_uncovered; // per stage: coordinate m+1
    bool obstruction_at_every_stage = false;
};

LimProdCertificate lim_prod_demo(std::size_t stages);

// CLI syntax: products of polynomial fractions, `r^n`, and `fact(n)^s`,
// e.g. "n^3", "1/(n+1)^2", "2^n", "(1/2)^n * n * fact(n)^-1".
GrowthSequence parse_sequence(const std::string& expr);
// "0=1,3=2/5" index->value pairs.
GrowthSequence parse_support(const std::string& text);

} // namespace cyclo
