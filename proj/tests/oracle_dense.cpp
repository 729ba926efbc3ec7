#include "oracle_dense.hpp"

#include <cassert>
#include <functional>

namespace oracle {

namespace {

std::vector<Rat> basis_vec(std::size_t dim, std::size_t i) {
    std::vector<Rat> v(dim, Rat(0));
    v[i] = 1;
    return v;
}

std::vector<Rat> mul_vec(const Alg& a, const std::vector<Rat>& u, const std::vector<Rat>& v) {
    std::vector<Rat> out(a.dim, Rat(0));
    for (std::size_t i = 0; i < a.dim; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < a.dim; ++j) {
            if (v[j] == 0) continue;
            for (std::size_t k = 0; k < a.dim; ++k)
                if (a.mult[i][j][k] != 0) out[k] += u[i] * v[j] * a.mult[i][j][k];
        }
    }
    return out;
}

} // namespace

Alg field() {
    Alg a;
    a.dim = 1;
    a.mult.assign(1, std::vector<std::vector<Rat>>(1, std::vector<Rat>(1, Rat(1))));
    a.unit = {Rat(1)};
    return a;
}

Alg matrix_algebra(std::size_t n) {
    Alg a;
    a.dim = n * n;
    a.mult.assign(a.dim, std::vector<std::vector<Rat>>(a.dim, std::vector<Rat>(a.dim, Rat(0))));
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (j == k) a.mult[idx(i, j)][idx(k, l)][idx(i, l)] = 1;
    a.unit.assign(a.dim, Rat(0));
    for (std::size_t i = 0; i < n; ++i) a.unit[idx(i, i)] = 1;
    return a;
}

Alg direct_sum(const Alg& x, const Alg& y) {
    Alg a;
    a.dim = x.dim + y.dim;
    a.mult.assign(a.dim, std::vector<std::vector<Rat>>(a.dim, std::vector<Rat>(a.dim, Rat(0))));
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t j = 0; j < x.dim; ++j)
            for (std::size_t k = 0; k < x.dim; ++k) a.mult[i][j][k] = x.mult[i][j][k];
    for (std::size_t i = 0; i < y.dim; ++i)
        for (std::size_t j = 0; j < y.dim; ++j)
            for (std::size_t k = 0; k < y.dim; ++k)
                a.mult[x.dim + i][x.dim + j][x.dim + k] = y.mult[i][j][k];
    a.unit = x.unit;
    a.unit.insert(a.unit.end(), y.unit.begin(), y.unit.end());
    return a;
}

Alg dual_numbers() {
    // basis {1, x} with x^2 = 0
    Alg a;
    a.dim = 2;
    a.mult.assign(2, std::vector<std::vector<Rat>>(2, std::vector<Rat>(2, Rat(0))));
    a.mult[0][0][0] = 1;
    a.mult[0][1][1] = 1;
    a.mult[1][0][1] = 1;
    a.unit = {Rat(1), Rat(0)};
    return a;
}

Alg s1_trunc(std::size_t cutoff) {
    Alg a = field();
    for (std::size_t i = 0; i < 2 * cutoff; ++i) a = direct_sum(a, field());
    return a;
}

Alg su2_trunc(std::size_t cutoff) {
    Alg a = matrix_algebra(1);
    for (std::size_t n = 2; n <= cutoff; ++n) a = direct_sum(a, matrix_algebra(n));
    return a;
}

std::size_t rank(Mat m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        const Rat pv = m[r][c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c] / pv;
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

namespace {

// Normalized chains: first factor runs over the basis of A, later factors over
// the classes of the basis elements other than the first unit-supporting one.
struct Chains {
    const Alg& a;
    std::size_t i0;                   // folded basis index
    std::vector<std::size_t> reduced; // reduced position -> basis index

    explicit Chains(const Alg& alg) : a(alg) {
        i0 = a.dim;
        for (std::size_t i = 0; i < a.dim; ++i) {
            if (i0 == a.dim && a.unit[i] != 0)
                i0 = i;
            else
                reduced.push_back(i);
        }
    }

    std::size_t red_dim() const { return reduced.size(); }

    std::size_t chain_dim(std::size_t n) const {
        std::size_t d = a.dim;
        for (std::size_t i = 0; i < n; ++i) d *= red_dim();
        return d;
    }

    std::vector<Rat> reduce(const std::vector<Rat>& v) const {
        const Rat f = v[i0] / a.unit[i0];
        std::vector<Rat> out;
        out.reserve(red_dim());
        for (std::size_t r : reduced) out.push_back(v[r] - f * a.unit[r]);
        return out;
    }

    // Multilinear emission of one tensor word into the matrix column. factors[0]
    // is a full coefficient vector; the rest are reduced-class coefficient vectors.
    void emit(Mat& m, const std::vector<std::vector<Rat>>& factors, const Rat& sign,
              std::size_t col) const {
        std::function<void(std::size_t, Rat, std::size_t)> rec = [&](std::size_t pos, Rat coeff,
                                                                     std::size_t row) {
            if (coeff == 0) return;
            if (pos == factors.size()) {
                m[row][col] += sign * coeff;
                return;
            }
            const auto& vec = factors[pos];
            for (std::size_t i = 0; i < vec.size(); ++i)
                if (vec[i] != 0) rec(pos + 1, coeff * vec[i], row * vec.size() + i);
        };
        rec(0, Rat(1), 0);
    }

    Mat b_matrix(std::size_t n) const {
        Mat m(chain_dim(n - 1), std::vector<Rat>(chain_dim(n), Rat(0)));
        if (chain_dim(n) == 0) return m;
        std::vector<std::size_t> digits(n, 0);
        std::size_t col = 0;
        for (std::size_t a0 = 0; a0 < a.dim; ++a0) {
            std::fill(digits.begin(), digits.end(), 0);
            while (true) {
                std::vector<std::vector<Rat>> lifts;
                lifts.push_back(basis_vec(a.dim, a0));
                for (std::size_t t = 0; t < n; ++t) lifts.push_back(basis_vec(a.dim, reduced[digits[t]]));
                for (std::size_t i = 0; i <= n; ++i) {
                    const Rat sign = (i % 2 == 0) ? Rat(1) : Rat(-1);
                    std::vector<std::vector<Rat>> factors;
                    if (i < n) {
                        const auto prod = mul_vec(a, lifts[i], lifts[i + 1]);
                        for (std::size_t t = 0; t <= n; ++t) {
                            if (t == i)
                                factors.push_back(i == 0 ? prod : reduce(prod));
                            else if (t == i + 1)
                                continue;
                            else
                                factors.push_back(t == 0 ? lifts[0] : reduce(lifts[t]));
                        }
                    } else {
                        const auto prod = mul_vec(a, lifts[n], lifts[0]);
                        factors.push_back(prod);
                        for (std::size_t t = 1; t < n; ++t) factors.push_back(reduce(lifts[t]));
                    }
                    emit(m, factors, sign, col);
                }
                ++col;
                std::size_t t = n;
                while (t > 0) {
                    if (++digits[t - 1] < red_dim()) break;
                    digits[t - 1] = 0;
                    --t;
                }
                if (t == 0) break;
            }
        }
        return m;
    }

    Mat B_matrix(std::size_t n) const {
        Mat m(chain_dim(n + 1), std::vector<Rat>(chain_dim(n), Rat(0)));
        if (chain_dim(n + 1) == 0 || chain_dim(n) == 0) return m;
        std::vector<std::size_t> digits(n, 0);
        std::size_t col = 0;
        for (std::size_t a0 = 0; a0 < a.dim; ++a0) {
            std::fill(digits.begin(), digits.end(), 0);
            while (true) {
                std::vector<std::vector<Rat>> lifts;
                lifts.push_back(basis_vec(a.dim, a0));
                for (std::size_t t = 0; t < n; ++t) lifts.push_back(basis_vec(a.dim, reduced[digits[t]]));
                for (std::size_t i = 0; i <= n; ++i) {
                    // 1 (x) a_i ... a_n (x) a_0 ... a_{i-1}
                    const Rat sign = ((n * i) % 2 == 0) ? Rat(1) : Rat(-1);
                    std::vector<std::vector<Rat>> factors;
                    factors.push_back(a.unit);
                    if (i == 0) {
                        for (std::size_t t = 0; t <= n; ++t) factors.push_back(reduce(lifts[t]));
                    } else {
                        for (std::size_t t = i; t <= n; ++t) factors.push_back(reduce(lifts[t]));
                        factors.push_back(reduce(lifts[0]));
                        for (std::size_t t = 1; t < i; ++t) factors.push_back(reduce(lifts[t]));
                    }
                    emit(m, factors, sign, col);
                }
                ++col;
                std::size_t t = n;
                while (t > 0) {
                    if (++digits[t - 1] < red_dim()) break;
                    digits[t - 1] = 0;
                    --t;
                }
                if (t == 0) break;
            }
        }
        return m;
    }
};

std::size_t tot_dim(const Chains& ch, std::size_t n) {
    std::size_t d = 0;
    for (std::size_t p = 0; 2 * p <= n; ++p) d += ch.chain_dim(n - 2 * p);
    return d;
}

Mat tot_diff(const Chains& ch, std::size_t n, const std::vector<Mat>& bs,
             const std::vector<Mat>& Bs) {
    Mat m(tot_dim(ch, n - 1), std::vector<Rat>(tot_dim(ch, n), Rat(0)));
    std::vector<std::size_t> coff, roff;
    for (std::size_t p = 0, off = 0; 2 * p <= n; ++p) {
        coff.push_back(off);
        off += ch.chain_dim(n - 2 * p);
    }
    for (std::size_t p = 0, off = 0; 2 * p <= n - 1; ++p) {
        roff.push_back(off);
        off += ch.chain_dim(n - 1 - 2 * p);
    }
    for (std::size_t p = 0; p < roff.size(); ++p) {
        const std::size_t deg_b = n - 2 * p;
        if (deg_b >= 1)
            for (std::size_t r = 0; r < bs[deg_b].size(); ++r)
                for (std::size_t c = 0; c < bs[deg_b][r].size(); ++c)
                    if (bs[deg_b][r][c] != 0) m[roff[p] + r][coff[p] + c] += bs[deg_b][r][c];
        if (p + 1 < coff.size()) {
            const std::size_t deg_B = n - 2 * (p + 1);
            for (std::size_t r = 0; r < Bs[deg_B].size(); ++r)
                for (std::size_t c = 0; c < Bs[deg_B][r].size(); ++c)
                    if (Bs[deg_B][r][c] != 0) m[roff[p] + r][coff[p + 1] + c] += Bs[deg_B][r][c];
        }
    }
    return m;
}

Mat kernel_columns(const Mat& m, std::size_t cols) {
    // Columns spanning ker(m), via reduced echelon form.
    Mat a = m;
    std::vector<std::size_t> piv_cols;
    std::size_t r = 0;
    const std::size_t rows = a.size();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        const Rat pv = a[r][c];
        for (auto& x : a[r]) x /= pv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        piv_cols.push_back(c);
        ++r;
    }
    std::vector<char> is_piv(cols, 0);
    for (std::size_t c : piv_cols) is_piv[c] = 1;
    Mat kernel(cols);
    std::size_t count = 0;
    for (std::size_t f = 0; f < cols; ++f)
        if (!is_piv[f]) ++count;
    for (auto& row : kernel) row.assign(count, Rat(0));
    std::size_t k = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        kernel[f][k] = 1;
        for (std::size_t i = 0; i < piv_cols.size(); ++i) kernel[piv_cols[i]][k] = -a[i][f];
        ++k;
    }
    return kernel;
}

} // namespace

std::vector<std::size_t> hh_dims(const Alg& a, std::size_t cutoff) {
    Chains ch(a);
    std::vector<Mat> bs(cutoff + 2);
    for (std::size_t n = 1; n <= cutoff + 1; ++n) bs[n] = ch.b_matrix(n);
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= cutoff; ++n) {
        const std::size_t rk_out = n >= 1 ? rank(bs[n]) : 0;
        dims.push_back(ch.chain_dim(n) - rk_out - rank(bs[n + 1]));
    }
    return dims;
}

std::vector<std::size_t> hc_dims(const Alg& a, std::size_t cutoff) {
    Chains ch(a);
    std::vector<Mat> bs(cutoff + 2), Bs(cutoff + 1);
    for (std::size_t n = 1; n <= cutoff + 1; ++n) bs[n] = ch.b_matrix(n);
    for (std::size_t n = 0; n <= cutoff; ++n) Bs[n] = ch.B_matrix(n);
    std::vector<std::size_t> dims, ranks(cutoff + 2, 0);
    for (std::size_t n = 1; n <= cutoff + 1; ++n) ranks[n] = rank(tot_diff(ch, n, bs, Bs));
    for (std::size_t n = 0; n <= cutoff; ++n)
        dims.push_back(tot_dim(ch, n) - ranks[n] - ranks[n + 1]);
    return dims;
}

std::size_t induced_s_rank(const Alg& a, std::size_t deg) {
    Chains ch(a);
    std::vector<Mat> bs(deg + 1), Bs(deg);
    for (std::size_t n = 1; n <= deg; ++n) bs[n] = ch.b_matrix(n);
    for (std::size_t n = 0; n + 1 <= deg; ++n) Bs[n] = ch.B_matrix(n);
    const Mat d_deg = tot_diff(ch, deg, bs, Bs);
    const Mat cycles = kernel_columns(d_deg, tot_dim(ch, deg)); // tot x z
    const Mat boundary = tot_diff(ch, deg - 1, bs, Bs);          // tot_{deg-2} x tot_{deg-1}

    // Stack [boundary columns | S(cycles)] and compare ranks.
    const std::size_t ambient = tot_dim(ch, deg - 2);
    const std::size_t drop = ch.chain_dim(deg);
    const std::size_t nb = boundary.empty() ? 0 : boundary[0].size();
    const std::size_t nz = cycles.empty() ? 0 : cycles[0].size();
    Mat stacked(ambient, std::vector<Rat>(nb + nz, Rat(0)));
    Mat bonly(ambient, std::vector<Rat>(nb, Rat(0)));
    for (std::size_t r = 0; r < ambient; ++r)
        for (std::size_t c = 0; c < nb; ++c) {
            stacked[r][c] = boundary[r][c];
            bonly[r][c] = boundary[r][c];
        }
    for (std::size_t r = 0; r < ambient; ++r)
        for (std::size_t c = 0; c < nz; ++c) stacked[r][nb + c] = cycles[drop + r][c];
    return rank(stacked) - rank(bonly);
}

} // namespace oracle
