#include "cyclo/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "cyclo/errors.hpp"

namespace cyclo {

namespace {

using ZRow = std::vector<std::pair<std::size_t, mpz_class>>;

// Divides the row by the gcd of its entries, keeping it a primitive integer vector.
void normalize_content(ZRow& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

ZRow integer_row(const std::map<std::size_t, Rational>& mr) {
    mpz_class lcm = 1;
    for (const auto& [c, v] : mr) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    ZRow zr;
    zr.reserve(mr.size());
    for (const auto& [c, v] : mr) zr.emplace_back(c, mpz_class(v.get_num() * (lcm / v.get_den())));
    normalize_content(zr);
    return zr;
}

// Q' = pv*Q - qv*P with the pivot column cancelled exactly, content-normalized.
ZRow eliminate_row(const ZRow& q, const mpz_class& qv, const ZRow& p, const mpz_class& pv,
                   std::size_t pc) {
    ZRow out;
    out.reserve(q.size() + p.size());
    auto qi = q.begin();
    auto pi = p.begin();
    while (qi != q.end() || pi != p.end()) {
        if (pi == p.end() || (qi != q.end() && qi->first < pi->first)) {
            if (qi->first != pc) out.emplace_back(qi->first, pv * qi->second);
            ++qi;
        } else if (qi == q.end() || pi->first < qi->first) {
            if (pi->first != pc) out.emplace_back(pi->first, -qv * pi->second);
            ++pi;
        } else {
            if (qi->first != pc) {
                mpz_class v = pv * qi->second - qv * pi->second;
                if (v != 0) out.emplace_back(qi->first, std::move(v));
            }
            ++qi;
            ++pi;
        }
    }
    normalize_content(out);
    return out;
}

const mpz_class* find_col(const ZRow& row, std::size_t c) {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
}

std::size_t dense_rank_q(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        const Rational pv = m[rank][c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            const Rational f = m[i][c] / pv;
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Markowitz-style least-fill pivoting; switches to dense elimination when the
// remaining submatrix is more than half full.
std::size_t sparse_rank_q(std::vector<ZRow> rows, std::size_t ncols) {
    std::vector<std::size_t> col_count(ncols, 0);
    std::size_t nnz = 0;
    for (const auto& r : rows)
        for (const auto& [c, v] : r) {
            ++col_count[c];
            ++nnz;
        }
    std::vector<char> active(rows.size(), 1);
    std::size_t active_rows = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].empty())
            active[i] = 0;
        else
            ++active_rows;
    std::size_t rank = 0;
    while (active_rows > 0) {
        std::size_t active_cols = 0;
        for (std::size_t c = 0; c < ncols; ++c)
            if (col_count[c] > 0) ++active_cols;
        if (active_rows * active_cols > 0 && 2 * nnz > active_rows * active_cols) {
            // Dense fallback on the remaining submatrix.
            std::vector<std::size_t> cmap(ncols, std::numeric_limits<std::size_t>::max());
            std::size_t k = 0;
            for (std::size_t c = 0; c < ncols; ++c)
                if (col_count[c] > 0) cmap[c] = k++;
            std::vector<std::vector<Rational>> dense;
            dense.reserve(active_rows);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (!active[i]) continue;
                std::vector<Rational> dr(active_cols, Rational(0));
                for (const auto& [c, v] : rows[i]) dr[cmap[c]] = Rational(v);
                dense.push_back(std::move(dr));
            }
            return rank + dense_rank_q(std::move(dense));
        }

        // Pivot with minimal (row_nnz-1)*(col_nnz-1).
        std::size_t best_row = 0, best_col = 0;
        unsigned long long best_score = std::numeric_limits<unsigned long long>::max();
        for (std::size_t i = 0; i < rows.size() && best_score > 0; ++i) {
            if (!active[i]) continue;
            const unsigned long long rw = rows[i].size() - 1;
            for (const auto& [c, v] : rows[i]) {
                const unsigned long long score = rw * (col_count[c] - 1);
                if (score < best_score) {
                    best_score = score;
                    best_row = i;
                    best_col = c;
                    if (score == 0) break;
                }
            }
        }
        const ZRow& prow = rows[best_row];
        const mpz_class pv = *find_col(prow, best_col);
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (!active[j] || j == best_row) continue;
            const mpz_class* qv = find_col(rows[j], best_col);
            if (!qv) continue;
            ZRow repl = eliminate_row(rows[j], *qv, prow, pv, best_col);
            for (const auto& [c, v] : rows[j]) {
                --col_count[c];
                --nnz;
            }
            for (const auto& [c, v] : repl) {
                ++col_count[c];
                ++nnz;
            }
            rows[j] = std::move(repl);
            if (rows[j].empty()) {
                active[j] = 0;
                --active_rows;
            }
        }
        for (const auto& [c, v] : prow) {
            --col_count[c];
            --nnz;
        }
        active[best_row] = 0;
        --active_rows;
        ++rank;
    }
    return rank;
}

// Deterministic reduced echelon form over integer rows; pivots restricted to the
// first pivot_limit columns (used for augmented solves).
struct Rref {
    std::vector<ZRow> rows;              // pivot rows first (in pivot order), leftovers after
    std::vector<std::size_t> pivot_col;  // per pivot row
    std::size_t npiv = 0;
};

Rref rref(const RationalMatrix& m, std::size_t pivot_limit) {
    Rref out;
    std::vector<ZRow> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty()) rows.push_back(integer_row(m.row(r)));
    std::size_t npiv = 0;
    for (std::size_t c = 0; c < pivot_limit && npiv < rows.size(); ++c) {
        // Among unprocessed rows with leading column c, take the sparsest.
        std::size_t best = rows.size();
        for (std::size_t i = npiv; i < rows.size(); ++i) {
            if (!rows[i].empty() && rows[i].front().first == c &&
                (best == rows.size() || rows[i].size() < rows[best].size()))
                best = i;
        }
        if (best == rows.size()) continue;
        std::swap(rows[npiv], rows[best]);
        const mpz_class pv = rows[npiv].front().second;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j == npiv) continue;
            const mpz_class* qv = find_col(rows[j], c);
            if (!qv) continue;
            rows[j] = eliminate_row(rows[j], *qv, rows[npiv], pv, c);
        }
        out.pivot_col.push_back(c);
        ++npiv;
        // Keep unprocessed rows ordered by leading column so the scan above stays valid.
        std::stable_sort(rows.begin() + npiv, rows.end(), [](const ZRow& a, const ZRow& b) {
            if (a.empty()) return false;
            if (b.empty()) return true;
            return a.front().first < b.front().first;
        });
        while (!rows.empty() && rows.back().empty()) rows.pop_back();
    }
    out.rows = std::move(rows);
    out.npiv = npiv;
    return out;
}

std::vector<SparseVec> kernel_from_rref(const Rref& rr, std::size_t ncols) {
    std::vector<char> is_pivot(ncols, 0);
    for (std::size_t c : rr.pivot_col) is_pivot[c] = 1;
    std::vector<SparseVec> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        SparseVec v;
        v.emplace_back(f, Rational(1));
        for (std::size_t i = 0; i < rr.npiv; ++i) {
            const mpz_class* e = find_col(rr.rows[i], f);
            if (!e) continue;
            Rational coeff(-*e, rr.rows[i].front().second);
            coeff.canonicalize();
            v.emplace_back(rr.pivot_col[i], std::move(coeff));
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        const Rational lead = v.front().second;
        if (lead != 1)
            for (auto& [c, val] : v) val /= lead;
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---- arithmetic mod p ----

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

using PRow = std::vector<std::pair<std::size_t, std::uint64_t>>;

const std::uint64_t* find_col_p(const PRow& row, std::size_t c) {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
}

PRow eliminate_row_p(const PRow& q, std::uint64_t f, const PRow& p, std::size_t pc,
                     std::uint64_t prime) {
    // Q' = Q - f*P
    PRow out;
    out.reserve(q.size() + p.size());
    auto qi = q.begin();
    auto pi = p.begin();
    while (qi != q.end() || pi != p.end()) {
        if (pi == p.end() || (qi != q.end() && qi->first < pi->first)) {
            if (qi->first != pc) out.emplace_back(*qi);
            ++qi;
        } else if (qi == q.end() || pi->first < qi->first) {
            if (pi->first != pc) {
                std::uint64_t v = prime - mul_mod(f, pi->second, prime);
                if (v == prime) v = 0;
                if (v) out.emplace_back(pi->first, v);
            }
            ++pi;
        } else {
            if (qi->first != pc) {
                std::uint64_t v = (qi->second + prime - mul_mod(f, pi->second, prime)) % prime;
                if (v) out.emplace_back(qi->first, v);
            }
            ++qi;
            ++pi;
        }
    }
    return out;
}

std::size_t dense_rank_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    std::size_t rank = 0;
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        const std::uint64_t inv = inv_mod(m[rank][c], p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const std::uint64_t f = mul_mod(m[i][c], inv, p);
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = (m[i][j] + p - mul_mod(f, m[rank][j], p)) % p;
        }
        ++rank;
    }
    return rank;
}

std::size_t sparse_rank_p(std::vector<PRow> rows, std::size_t ncols, std::uint64_t p) {
    std::vector<std::size_t> col_count(ncols, 0);
    std::size_t nnz = 0;
    for (const auto& r : rows)
        for (const auto& [c, v] : r) {
            ++col_count[c];
            ++nnz;
        }
    std::vector<char> active(rows.size(), 1);
    std::size_t active_rows = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].empty())
            active[i] = 0;
        else
            ++active_rows;
    std::size_t rank = 0;
    while (active_rows > 0) {
        std::size_t active_cols = 0;
        for (std::size_t c = 0; c < ncols; ++c)
            if (col_count[c] > 0) ++active_cols;
        if (active_rows * active_cols > 0 && 2 * nnz > active_rows * active_cols) {
            std::vector<std::size_t> cmap(ncols, std::numeric_limits<std::size_t>::max());
            std::size_t k = 0;
            for (std::size_t c = 0; c < ncols; ++c)
                if (col_count[c] > 0) cmap[c] = k++;
            std::vector<std::vector<std::uint64_t>> dense;
            dense.reserve(active_rows);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (!active[i]) continue;
                std::vector<std::uint64_t> dr(active_cols, 0);
                for (const auto& [c, v] : rows[i]) dr[cmap[c]] = v;
                dense.push_back(std::move(dr));
            }
            return rank + dense_rank_p(std::move(dense), p);
        }
        std::size_t best_row = 0, best_col = 0;
        unsigned long long best_score = std::numeric_limits<unsigned long long>::max();
        for (std::size_t i = 0; i < rows.size() && best_score > 0; ++i) {
            if (!active[i]) continue;
            const unsigned long long rw = rows[i].size() - 1;
            for (const auto& [c, v] : rows[i]) {
                const unsigned long long score = rw * (col_count[c] - 1);
                if (score < best_score) {
                    best_score = score;
                    best_row = i;
                    best_col = c;
                    if (score == 0) break;
                }
            }
        }
        const PRow prow = rows[best_row];
        const std::uint64_t pinv = inv_mod(*find_col_p(prow, best_col), p);
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (!active[j] || j == best_row) continue;
            const std::uint64_t* qv = find_col_p(rows[j], best_col);
            if (!qv) continue;
            PRow repl = eliminate_row_p(rows[j], mul_mod(*qv, pinv, p), prow, best_col, p);
            for (const auto& [c, v] : rows[j]) {
                --col_count[c];
                --nnz;
            }
            for (const auto& [c, v] : repl) {
                ++col_count[c];
                ++nnz;
            }
            rows[j] = std::move(repl);
            if (rows[j].empty()) {
                active[j] = 0;
                --active_rows;
            }
        }
        for (const auto& [c, v] : prow) {
            --col_count[c];
            --nnz;
        }
        active[best_row] = 0;
        --active_rows;
        ++rank;
    }
    return rank;
}

} // namespace

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
    const std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (den == 0) throw BadPrimeError("prime divides a stored denominator");
    // fdiv gives the floor remainder, already in [0, p) for negative numerators.
    const std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    return mul_mod(num, inv_mod(den, p), p);
}

std::size_t rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return 0;
    const RationalMatrix* work = &m;
    RationalMatrix t;
    if (m.rows() > m.cols()) {
        t = m.transpose();
        work = &t;
    }
    std::vector<ZRow> rows;
    rows.reserve(work->rows());
    for (std::size_t r = 0; r < work->rows(); ++r)
        if (!work->row(r).empty()) rows.push_back(integer_row(work->row(r)));
    return sparse_rank_q(std::move(rows), work->cols());
}

std::size_t modular_rank(const RationalMatrix& m, std::uint64_t p) {
    if (p < 2) throw BadPrimeError("modulus must be a prime");
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return 0;
    const RationalMatrix* work = &m;
    RationalMatrix t;
    if (m.rows() > m.cols()) {
        t = m.transpose();
        work = &t;
    }
    std::vector<PRow> rows;
    rows.reserve(work->rows());
    for (std::size_t r = 0; r < work->rows(); ++r) {
        PRow pr;
        pr.reserve(work->row(r).size());
        for (const auto& [c, v] : work->row(r)) {
            const std::uint64_t val = reduce_mod(v, p);
            if (val) pr.emplace_back(c, val);
        }
        if (!pr.empty()) rows.push_back(std::move(pr));
    }
    return sparse_rank_p(std::move(rows), work->cols(), p);
}

std::size_t rank_checked(const RationalMatrix& m, bool mod_check, int num_primes) {
    const std::size_t exact = rank(m);
    if (!mod_check) return exact;
    std::mt19937_64 rng(content_seed(m));
    int ok = 0, attempts = 0;
    while (ok < num_primes) {
        if (++attempts > 24)
            throw ModularMismatchError("persistent exact/modular rank mismatch — elimination defect");
        const std::uint64_t p = random_prime_above(1'000'000, rng);
        std::size_t rp;
        try {
            rp = modular_rank(m, p);
        } catch (const BadPrimeError&) {
            continue;
        }
        if (rp == exact) {
            ++ok;
        } else if (rp > exact) {
            throw ModularMismatchError("modular rank exceeds exact rank — elimination defect");
        }
        // rp < exact: the prime divides the relevant minor; resample.
    }
    return exact;
}

std::vector<SparseVec> kernel_basis_sparse(const RationalMatrix& m) {
    if (m.cols() == 0) return {};
    Rref rr = rref(m, m.cols());
    return kernel_from_rref(rr, m.cols());
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    std::vector<std::vector<Rational>> out;
    for (const auto& v : kernel_basis_sparse(m)) out.push_back(to_dense(v, m.cols()));
    return out;
}

std::size_t homology_dim(const RationalMatrix& d_n, const RationalMatrix& d_next) {
    return homology_dim_checked(d_n, d_next, false);
}

std::size_t homology_dim_checked(const RationalMatrix& d_n, const RationalMatrix& d_next,
                                 bool mod_check) {
    if (d_n.cols() != d_next.rows())
        throw DimensionMismatchError("homology_dim: cols of d_n must equal rows of d_next");
    if (!d_n.times(d_next).is_zero())
        throw CompositionNonzeroError("homology_dim: d_n * d_next is nonzero");
    const std::size_t ker = d_n.cols() - rank_checked(d_n, mod_check);
    const std::size_t img = rank_checked(d_next, mod_check);
    assert(ker >= img);
    return ker - img;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& rhs) {
    RationalMatrix r(a.rows(), 1);
    if (rhs.size() != a.rows()) throw DimensionMismatchError("solve: rhs length mismatch");
    for (std::size_t i = 0; i < rhs.size(); ++i) r.set(i, 0, rhs[i]);
    auto sol = solve_multi(a, r);
    if (!sol) return std::nullopt;
    std::vector<Rational> out(a.cols(), Rational(0));
    for (std::size_t i = 0; i < a.cols(); ++i) out[i] = sol->at(i, 0);
    return out;
}

std::optional<RationalMatrix> solve_multi(const RationalMatrix& a, const RationalMatrix& rhs) {
    if (a.rows() != rhs.rows()) throw DimensionMismatchError("solve_multi: row mismatch");
    RationalMatrix aug(a.rows(), a.cols() + rhs.cols());
    aug.insert_block(0, 0, a);
    aug.insert_block(0, a.cols(), rhs);
    Rref rr = rref(aug, a.cols());
    // Any surviving row with leading column in the rhs region marks inconsistency.
    for (std::size_t i = rr.npiv; i < rr.rows.size(); ++i)
        if (!rr.rows[i].empty()) return std::nullopt;
    RationalMatrix sol(a.cols(), rhs.cols());
    for (std::size_t i = 0; i < rr.npiv; ++i) {
        const mpz_class pv = rr.rows[i].front().second;
        for (const auto& [c, v] : rr.rows[i]) {
            if (c < a.cols()) continue;
            Rational coeff(v, pv);
            coeff.canonicalize();
            sol.set(rr.pivot_col[i], c - a.cols(), coeff);
        }
    }
    return sol;
}

std::vector<SparseVec> column_space_basis(const RationalMatrix& m) {
    RationalMatrix t = m.transpose();
    Rref rr = rref(t, t.cols());
    std::vector<SparseVec> basis;
    basis.reserve(rr.npiv);
    for (std::size_t i = 0; i < rr.npiv; ++i) {
        SparseVec v;
        v.reserve(rr.rows[i].size());
        const mpz_class pv = rr.rows[i].front().second;
        for (const auto& [c, val] : rr.rows[i]) {
            Rational q(val, pv);
            q.canonicalize();
            v.emplace_back(c, std::move(q));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t random_prime_above(std::uint64_t lo, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(lo + 1, std::max<std::uint64_t>(4 * lo, 1ULL << 30));
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::uint64_t c = dist(rng) | 1;
        if (is_prime_u64(c)) return c;
    }
    throw MathError("random_prime_above: no prime found");
}

std::uint64_t content_seed(const RationalMatrix& m) {
    const std::uint64_t fnv_prime = 1099511628211ULL;
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= fnv_prime;
    };
    mix(m.rows());
    mix(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (const auto& [c, v] : m.row(r)) {
            mix(r);
            mix(c);
            mix(mpz_fdiv_ui(v.get_num().get_mpz_t(), 0xFFFFFFFBULL));
            mix(mpz_fdiv_ui(v.get_den().get_mpz_t(), 0xFFFFFFFBULL));
            mix(sgn(v) < 0 ? 1 : 0);
        }
    }
    return h;
}

} // namespace cyclo
