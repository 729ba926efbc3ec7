#include "cyclo/chern.hpp"

#include "cyclo/cyclic.hpp"
#include "cyclo/errors.hpp"

namespace cyclo {

EvenCycle chern_character(const Algebra& a, const Idempotent& e, std::size_t max_even_degree,
                          const ComputeOptions& opts) {
    if (!a.is_unital()) throw NotUnitalError("chern_character needs a unital algebra");
    if (e.coeffs.size() != a.dim()) throw InputError("idempotent has wrong length");
    if (max_even_degree % 2 != 0) throw InputError("chern_character: degree must be even");
    const SparseVec ev = to_sparse(e.coeffs);
    if (a.multiply(ev, ev) != ev) throw NotIdempotentError("element does not satisfy e*e = e");

    ChainBasis cb(a, true);
    EvenCycle cycle;
    cycle.max_even_degree = max_even_degree;
    cycle.components.push_back(e.coeffs); // ch_0 = e

    // chi = e - 1/2, the full first factor of every higher component.
    std::vector<Rational> chi = e.coeffs;
    for (std::size_t i = 0; i < a.dim(); ++i) chi[i] -= Rational(1, 2) * a.unit()[i];
    const std::vector<Rational> ebar = to_dense(cb.reduce_class(ev), cb.reduced_dim());

    mpz_class scale_num = 1; // (2n)!/n! accumulated as 2n(2n-1)...(n+1)
    for (std::size_t n = 1; 2 * n <= max_even_degree; ++n) {
        scale_num *= 2 * n * (2 * n - 1);
        scale_num /= n; // (2n)!/n! = prod_{k=n+1}^{2n} k stays integral stepwise
        Rational scale(scale_num);
        if (n % 2 == 1) scale = -scale;
        std::vector<Rational> comp = chi;
        for (std::size_t t = 0; t < 2 * n; ++t) {
            std::vector<Rational> next(comp.size() * ebar.size(), Rational(0));
            for (std::size_t i = 0; i < comp.size(); ++i) {
                if (comp[i] == 0) continue;
                for (std::size_t r = 0; r < ebar.size(); ++r)
                    if (ebar[r] != 0) next[i * ebar.size() + r] = comp[i] * ebar[r];
            }
            comp = std::move(next);
        }
        for (auto& c : comp) c *= scale;
        cycle.components.push_back(std::move(comp));
    }

    if (max_even_degree >= 2) {
        const MixedComplex mc = mixed_complex(a, max_even_degree, opts);
        for (std::size_t n = 1; 2 * n <= max_even_degree; ++n) {
            std::vector<Rational> lhs = mc.b[2 * n].apply(cycle.components[n]);
            const std::vector<Rational> rhs = mc.B[2 * n - 2].apply(cycle.components[n - 1]);
            for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += rhs[i];
            for (const auto& c : lhs)
                if (c != 0)
                    throw MathError("chern_character: cycle condition fails at degree " +
                                    std::to_string(2 * n));
        }
    }
    return cycle;
}

Rational pair_trace(const Algebra& a, const TraceFunctional& tau, const EvenCycle& c) {
    if (!is_trace(a, tau)) throw NotATraceError("functional fails the trace identity");
    if (c.components.empty() || c.components[0].size() != a.dim())
        throw InputError("even cycle does not match the algebra");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) acc += tau.coefficients[i] * c.components[0][i];
    return acc;
}

RationalMatrix chern_matrix(const Algebra& a, const BlockDecomposition& blocks) {
    validate_blocks(a, blocks);
    const std::size_t k = blocks.block_sizes.size();
    RationalMatrix m(k, k);
    std::vector<TraceFunctional> traces(k);
    for (std::size_t i = 0; i < k; ++i) {
        traces[i].coefficients.assign(a.dim(), Rational(0));
        const std::size_t n = blocks.block_sizes[i], lo = blocks.block_offsets[i];
        for (std::size_t j = 0; j < n; ++j) traces[i].coefficients[lo + j * n + j] = 1;
    }
    for (std::size_t j = 0; j < k; ++j) {
        Idempotent e;
        e.coeffs.assign(a.dim(), Rational(0));
        e.coeffs[blocks.block_offsets[j]] = 1; // e_11 of block j
        const EvenCycle ch = chern_character(a, e, 2);
        for (std::size_t i = 0; i < k; ++i) m.set(i, j, pair_trace(a, traces[i], ch));
    }
    return m;
}

} // namespace cyclo
