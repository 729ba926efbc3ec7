#include "cyclo/hochschild.hpp"

#include <string>

#include "cyclo/errors.hpp"
#include "cyclo/linalg.hpp"
#include "cyclo/report_io.hpp"

namespace cyclo {

namespace {

std::string cache_key(const Algebra& a, bool normalized, char kind, std::size_t degree) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(content_hash(a)));
    return std::string(buf) + (normalized ? "_n_" : "_u_") + kind + std::to_string(degree);
}

} // namespace

ChainBasis::ChainBasis(const Algebra& a, bool normalized) : a_(a), normalized_(normalized) {
    if (!a.is_unital()) throw NotUnitalError("Hochschild chains need a unital algebra");
    const std::size_t d = a.dim();
    if (normalized_) {
        const auto& u = a.unit();
        dropped_ = d;
        for (std::size_t i = 0; i < d; ++i) {
            if (dropped_ == d && u[i] != 0)
                dropped_ = i;
            else
                reduced_.push_back(i);
        }
    } else {
        for (std::size_t i = 0; i < d; ++i) reduced_.push_back(i);
    }
    reduced_of_basis_.resize(d);
    for (std::size_t i = 0; i < d; ++i) reduced_of_basis_[i] = reduce_class({{i, Rational(1)}});
    red_prod_.assign(d, std::vector<SparseVec>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) red_prod_[i][j] = reduce_class(a.product(i, j));
}

std::size_t ChainBasis::chain_dim(std::size_t degree) const {
    std::size_t dim = a_.dim();
    if (degree == 0) return dim;
    if (reduced_.empty()) return 0;
    const std::size_t cap = std::size_t(1) << 62;
    for (std::size_t i = 0; i < degree; ++i) {
        if (dim > cap / reduced_.size())
            throw SizeLimitError("chain dimension overflows at degree " + std::to_string(degree));
        dim *= reduced_.size();
    }
    return dim;
}

SparseVec ChainBasis::reduce_class(const SparseVec& full) const {
    if (!normalized_) return full;
    // Position of basis index i in the reduced basis is i or i-1 around dropped_.
    auto pos = [this](std::size_t i) { return i < dropped_ ? i : i - 1; };
    const auto& u = a_.unit();
    Rational lead = 0;
    for (const auto& [i, c] : full)
        if (i == dropped_) lead = c;
    if (lead == 0) {
        SparseVec out;
        out.reserve(full.size());
        for (const auto& [i, c] : full) out.emplace_back(pos(i), c);
        return out;
    }
    const Rational factor = lead / u[dropped_];
    std::map<std::size_t, Rational> acc;
    for (const auto& [i, c] : full)
        if (i != dropped_) acc[pos(i)] = c;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i == dropped_ || u[i] == 0) continue;
        auto [it, inserted] = acc.try_emplace(pos(i), -factor * u[i]);
        if (!inserted) it->second -= factor * u[i];
    }
    SparseVec out;
    for (auto& [i, c] : acc)
        if (c != 0) out.emplace_back(i, std::move(c));
    return out;
}

RationalMatrix ChainBasis::b_matrix(std::size_t n) const {
    if (n == 0) throw InputError("b_matrix: degree must be >= 1");
    const std::size_t R = reduced_.size();
    const std::size_t rows = chain_dim(n - 1), cols = chain_dim(n);
    RationalMatrix out(rows, cols);
    if (cols == 0) return out;

    std::vector<std::size_t> digits(n, 0); // reduced indices r_1..r_n
    std::vector<std::size_t> row_digits(n >= 1 ? n - 1 : 0);
    auto row_index = [&](std::size_t first) {
        std::size_t idx = first;
        for (std::size_t t = 0; t + 1 < n; ++t) idx = idx * R + row_digits[t];
        return idx;
    };
    std::size_t col = 0;
    for (std::size_t a0 = 0; a0 < a_.dim(); ++a0) {
        std::fill(digits.begin(), digits.end(), 0);
        while (true) {
            // term 0: (a0 * a_1) (x) a_2 ... a_n
            {
                for (std::size_t t = 1; t < n; ++t) row_digits[t - 1] = digits[t];
                for (const auto& [k, c] : a_.product(a0, reduced_[digits[0]]))
                    out.add_at(row_index(k), col, c);
            }
            // terms i = 1..n-1: +/- a0 (x) ... (a_i * a_{i+1}) ... a_n
            for (std::size_t i = 1; i < n; ++i) {
                std::size_t t2 = 0;
                for (std::size_t t = 0; t + 1 < i; ++t) row_digits[t2++] = digits[t];
                const std::size_t merged_slot = t2++;
                for (std::size_t t = i + 1; t < n; ++t) row_digits[t2++] = digits[t];
                const bool neg = i % 2 == 1;
                const SparseVec& rp = red_prod_[reduced_[digits[i - 1]]][reduced_[digits[i]]];
                for (const auto& [kred, c] : rp) {
                    row_digits[merged_slot] = kred;
                    out.add_at(row_index(a0), col, neg ? Rational(-c) : c);
                }
            }
            // last term: (-1)^n (a_n * a0) (x) a_1 ... a_{n-1}
            {
                for (std::size_t t = 0; t + 1 < n; ++t) row_digits[t] = digits[t];
                const bool neg = n % 2 == 1;
                for (const auto& [k, c] : a_.product(reduced_[digits[n - 1]], a0))
                    out.add_at(row_index(k), col, neg ? Rational(-c) : c);
            }
            ++col;
            std::size_t t = n;
            while (t > 0) {
                if (++digits[t - 1] < R) break;
                digits[t - 1] = 0;
                --t;
            }
            if (t == 0) break;
        }
    }
    return out;
}

RationalMatrix ChainBasis::B_matrix(std::size_t n) const {
    if (!normalized_) throw MathError("B is defined on the normalized chains");
    const std::size_t R = reduced_.size();
    const std::size_t rows = chain_dim(n + 1), cols = chain_dim(n);
    RationalMatrix out(rows, cols);
    if (cols == 0 || rows == 0) return out;

    const SparseVec unit_vec = to_sparse(a_.unit());
    std::vector<std::size_t> digits(n, 0);
    std::vector<std::size_t> row_digits(n + 1);
    auto row_index = [&](std::size_t first) {
        std::size_t idx = first;
        for (std::size_t t = 0; t < n + 1; ++t) idx = idx * R + row_digits[t];
        return idx;
    };
    std::size_t col = 0;
    for (std::size_t a0 = 0; a0 < a_.dim(); ++a0) {
        const SparseVec& a0bar = reduced_of_basis_[a0];
        std::fill(digits.begin(), digits.end(), 0);
        while (true) {
            for (std::size_t i = 0; i <= n; ++i) {
                // 1 (x) a_i ... a_n (x) a0bar (x) a_1 ... a_{i-1}; for i = 0 the
                // cycle starts with a0bar itself.
                std::size_t t2 = 0;
                std::size_t a0_slot = 0;
                if (i == 0) {
                    a0_slot = t2++;
                    for (std::size_t t = 0; t < n; ++t) row_digits[t2++] = digits[t];
                } else {
                    for (std::size_t t = i - 1; t < n; ++t) row_digits[t2++] = digits[t];
                    a0_slot = t2++;
                    for (std::size_t t = 0; t + 1 < i; ++t) row_digits[t2++] = digits[t];
                }
                const bool neg = (n * i) % 2 == 1;
                for (const auto& [k0, c0] : a0bar) {
                    row_digits[a0_slot] = k0;
                    for (const auto& [ku, cu] : unit_vec) {
                        const Rational v = cu * c0;
                        out.add_at(row_index(ku), col, neg ? Rational(-v) : v);
                    }
                }
            }
            ++col;
            std::size_t t = n;
            while (t > 0) {
                if (++digits[t - 1] < R) break;
                digits[t - 1] = 0;
                --t;
            }
            if (t == 0) break;
        }
    }
    return out;
}

ChainComplex hochschild_complex(const Algebra& a, std::size_t max_degree, const ComputeOptions& opts) {
    ChainBasis cb(a, opts.normalized);
    ChainComplex cc;
    cc.max_degree = max_degree;
    cc.dims.resize(max_degree + 1);
    for (std::size_t n = 0; n <= max_degree; ++n) {
        cc.dims[n] = cb.chain_dim(n);
        if (cc.dims[n] > opts.size_limit && !opts.force_size)
            throw SizeLimitError("degree " + std::to_string(n) + " needs " +
                                 std::to_string(cc.dims[n]) +
                                 " basis elements, above the cap of " +
                                 std::to_string(opts.size_limit));
    }
    cc.differentials.resize(max_degree + 1);
    cc.differentials[0] = RationalMatrix(0, cc.dims[0]);
    for (std::size_t n = 1; n <= max_degree; ++n) {
        bool built = false;
        if (opts.cache) {
            const auto key = cache_key(a, opts.normalized, 'b', n);
            if (auto m = opts.cache->load(key);
                m && m->rows() == cc.dims[n - 1] && m->cols() == cc.dims[n]) {
                cc.differentials[n] = std::move(*m);
                built = true;
            }
        }
        if (!built) {
            cc.differentials[n] = cb.b_matrix(n);
            if (opts.cache) opts.cache->store(cache_key(a, opts.normalized, 'b', n), cc.differentials[n]);
        }
    }
    for (std::size_t n = 1; n + 1 <= max_degree; ++n)
        if (!cc.differentials[n].times(cc.differentials[n + 1]).is_zero())
            throw CompositionNonzeroError("b∘b is nonzero at degree " + std::to_string(n + 1));
    return cc;
}

namespace {

HomologyReport hh_report(const Algebra& a, std::size_t cutoff, const ComputeOptions& opts,
                         bool cohomology) {
    ChainComplex cc = hochschild_complex(a, cutoff + 1, opts);
    std::vector<std::size_t> ranks(cutoff + 2, 0);
    for (std::size_t n = 1; n <= cutoff + 1; ++n) {
        const RationalMatrix& d = cc.differentials[n];
        ranks[n] = rank_checked(cohomology ? d.transpose() : d, opts.mod_check);
    }
    HomologyReport rep;
    rep.theory = cohomology ? Theory::HH_co : Theory::HH;
    rep.cutoff = cutoff;
    rep.dims.resize(cutoff + 1);
    rep.reliable.resize(cutoff + 1);
    for (std::size_t n = 0; n <= cutoff; ++n) {
        rep.dims[n] = cc.dims[n] - ranks[n] - ranks[n + 1];
        rep.reliable[n] = n < cutoff;
    }
    return rep;
}

} // namespace

HomologyReport hh_dims(const Algebra& a, std::size_t cutoff, const ComputeOptions& opts) {
    return hh_report(a, cutoff, opts, false);
}

HomologyReport hh_cohomology_dims(const Algebra& a, std::size_t cutoff, const ComputeOptions& opts) {
    return hh_report(a, cutoff, opts, true);
}

} // namespace cyclo
