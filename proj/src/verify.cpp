#include "cyclo/verify.hpp"

#include <map>

#include "cyclo/cyclic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/homology_basis.hpp"
#include "cyclo/linalg.hpp"

namespace cyclo {

AdditivityReport verify_additivity(const Algebra& a, const Algebra& b, std::size_t cutoff,
                                   const ComputeOptions& opts) {
    if (!a.is_unital() || !b.is_unital())
        throw NotUnitalError("verify_additivity needs unital summands");
    AdditivityReport rep;
    rep.cutoff = cutoff;
    const Algebra sum = direct_sum(a, b);
    rep.hh_a = hh_dims(a, cutoff, opts).dims;
    rep.hh_b = hh_dims(b, cutoff, opts).dims;
    rep.hh_sum = hh_dims(sum, cutoff, opts).dims;
    rep.hc_a = hc_dims(a, cutoff, opts).dims;
    rep.hc_b = hc_dims(b, cutoff, opts).dims;
    rep.hc_sum = hc_dims(sum, cutoff, opts).dims;
    rep.additive = true;
    for (std::size_t n = 0; n <= cutoff; ++n) {
        rep.additive = rep.additive && rep.hh_sum[n] == rep.hh_a[n] + rep.hh_b[n] &&
                       rep.hc_sum[n] == rep.hc_a[n] + rep.hc_b[n];
    }
    return rep;
}

namespace {

// Rows of the separability system: m(e) = unit and, for every basis element b_l,
// (b_l (x) 1) e = e (1 (x) b_l), over unknowns e_{ij}.
RationalMatrix separability_system(const Algebra& a, std::vector<Rational>& rhs) {
    const std::size_t d = a.dim();
    const std::size_t unknowns = d * d;
    RationalMatrix sys(d + d * d * d, unknowns);
    rhs.assign(d + d * d * d, Rational(0));
    for (std::size_t k = 0; k < d; ++k) rhs[k] = a.unit()[k];
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, c] : a.product(i, j)) sys.add_at(k, i * d + j, c);
    // Row (l, s, t): sum_i c_{li}^s e_{it} - sum_j c_{jl}^t e_{sj} = 0.
    auto row_of = [d](std::size_t l, std::size_t s, std::size_t t) {
        return d + (l * d + s) * d + t;
    };
    for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t i = 0; i < d; ++i) {
            for (const auto& [s, c] : a.product(l, i))
                for (std::size_t t = 0; t < d; ++t) sys.add_at(row_of(l, s, t), i * d + t, c);
            for (const auto& [t, c] : a.product(i, l))
                for (std::size_t s = 0; s < d; ++s) sys.add_at(row_of(l, s, t), s * d + i, -c);
        }
    }
    return sys;
}

} // namespace

std::optional<SeparabilityIdempotent> separability_idempotent(const Algebra& a) {
    if (!a.is_unital()) throw NotUnitalError("separability needs a unital algebra");
    std::vector<Rational> rhs;
    const RationalMatrix sys = separability_system(a, rhs);
    auto particular = solve(sys, rhs);
    if (!particular) return std::nullopt;
    const auto kernel = kernel_basis_sparse(sys);
    if (!kernel.empty()) {
        // Minimum-norm solution: subtract the kernel projection, exactly.
        const RationalMatrix k = from_columns(sys.cols(), kernel);
        const RationalMatrix kt = k.transpose();
        const RationalMatrix gram = kt.times(k);
        RationalMatrix pvec(sys.cols(), 1);
        for (std::size_t i = 0; i < particular->size(); ++i) pvec.set(i, 0, (*particular)[i]);
        const RationalMatrix target = kt.times(pvec);
        std::vector<Rational> trhs(kernel.size());
        for (std::size_t i = 0; i < kernel.size(); ++i) trhs[i] = target.at(i, 0);
        auto alpha = solve(gram, trhs);
        if (!alpha) throw MathError("separability: Gram system unexpectedly singular");
        for (std::size_t j = 0; j < kernel.size(); ++j)
            for (const auto& [i, c] : kernel[j]) (*particular)[i] -= (*alpha)[j] * c;
    }
    return SeparabilityIdempotent{std::move(*particular)};
}

bool is_separability_idempotent(const Algebra& a, const SeparabilityIdempotent& e) {
    const std::size_t d = a.dim();
    if (e.tensor.size() != d * d || !a.is_unital()) return false;
    // m(e) = unit
    std::vector<Rational> m(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (e.tensor[i * d + j] == 0) continue;
            for (const auto& [k, c] : a.product(i, j)) m[k] += e.tensor[i * d + j] * c;
        }
    if (m != a.unit()) return false;
    // (b_l (x) 1) e = e (1 (x) b_l)
    for (std::size_t l = 0; l < d; ++l) {
        std::map<std::pair<std::size_t, std::size_t>, Rational> diff;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const Rational& v = e.tensor[i * d + j];
                if (v == 0) continue;
                for (const auto& [s, c] : a.product(l, i)) diff[{s, j}] += v * c;
                for (const auto& [t, c] : a.product(j, l)) diff[{i, t}] -= v * c;
            }
        for (const auto& [key, v] : diff)
            if (v != 0) return false;
    }
    return true;
}

SeparableVanishingReport verify_separable_vanishing(const Algebra& a, std::size_t cutoff,
                                                    const ComputeOptions& opts) {
    SeparableVanishingReport rep;
    rep.separable = separability_idempotent(a).has_value();
    rep.hh = hh_dims(a, cutoff, opts).dims;
    rep.vanishing_above_zero = true;
    for (std::size_t n = 1; n <= cutoff; ++n)
        rep.vanishing_above_zero = rep.vanishing_above_zero && rep.hh[n] == 0;
    rep.implication_holds = !rep.separable || rep.vanishing_above_zero;
    return rep;
}

ResolutionReport resolution_of_unitalization(const Algebra& a, bool mod_check) {
    const std::size_t d = a.dim();
    const std::size_t dp = d + 1; // dim of A+, basis of A first, adjoined unit last

    ResolutionReport rep;
    rep.dims = {dp * dp, 2 * d * dp, d * d};

    // d2: A (x) A -> A (x) A+ (+) A+ (x) A, x (x) y -> (x (x) iy, -ix (x) y).
    RationalMatrix d2(2 * d * dp, d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            d2.set(x * dp + y, x * d + y, 1);
            d2.set(d * dp + x * d + y, x * d + y, -1);
        }
    // d1: (x (x) v, u (x) y) -> ix (x) v + u (x) iy in A+ (x) A+.
    RationalMatrix d1(dp * dp, 2 * d * dp);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t v = 0; v < dp; ++v) d1.set(x * dp + v, x * dp + v, 1);
    for (std::size_t u = 0; u < dp; ++u)
        for (std::size_t y = 0; y < d; ++y) d1.add_at(u * dp + y, d * dp + u * d + y, 1);

    if (!d1.times(d2).is_zero()) throw MathError("resolution: d1 ∘ d2 != 0");
    // Augmentation eps (x) eps kills d1: eps vanishes on A and is 1 on the adjoined unit.
    RationalMatrix eps(1, dp * dp);
    eps.set(0, d * dp + d, 1);
    if (!eps.times(d1).is_zero()) throw MathError("resolution: eps ∘ d1 != 0");

    const std::size_t r1 = rank_checked(d1, mod_check);
    const std::size_t r2 = rank_checked(d2, mod_check);
    rep.homology = {rep.dims[0] - r1, rep.dims[1] - r1 - r2, rep.dims[2] - r2};
    rep.exact = rep.homology == std::array<std::size_t, 3>{1, 0, 0};
    return rep;
}

RationalMatrix adjoint_projection(const Algebra& a, const BlockDecomposition& blocks) {
    validate_blocks(a, blocks);
    const std::size_t d = a.dim();
    RationalMatrix p(d, d);
    for (std::size_t blk = 0; blk < blocks.block_sizes.size(); ++blk) {
        const std::size_t n = blocks.block_sizes[blk];
        const std::size_t lo = blocks.block_offsets[blk];
        const Rational weight(1, static_cast<long>(n));
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t diag_col = lo + j * n + j;
            for (std::size_t l = 0; l < n; ++l) p.set(lo + l * n + l, diag_col, weight);
        }
    }
    if (!(p.times(p) == p)) throw MathError("adjoint_projection: P^2 != P");
    return p;
}

} // namespace cyclo
