#include "cyclo/cyclic.hpp"

#include <map>
#include <string>

#include "cyclo/errors.hpp"
#include "cyclo/homology_basis.hpp"
#include "cyclo/linalg.hpp"
#include "cyclo/report_io.hpp"

namespace cyclo {

namespace {

std::string cache_key(const Algebra& a, char kind, std::size_t degree) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(content_hash(a)));
    return std::string(buf) + "_n_" + kind + std::to_string(degree);
}

RationalMatrix raw_s(const TotalComplex& tc, std::size_t degree) {
    RationalMatrix s(tc.dims[degree - 2], tc.dims[degree]);
    for (std::size_t p = 1; p < tc.offsets[degree].size(); ++p) {
        const std::size_t src = tc.offsets[degree][p];
        const std::size_t dst = tc.offsets[degree - 2][p - 1];
        const std::size_t chunk = (p + 1 < tc.offsets[degree].size())
                                      ? tc.offsets[degree][p + 1] - src
                                      : tc.dims[degree] - src;
        for (std::size_t i = 0; i < chunk; ++i) s.set(dst + i, src + i, 1);
    }
    return s;
}

std::size_t leading_chunk(const TotalComplex& tc, std::size_t degree) {
    return tc.offsets[degree].size() > 1 ? tc.offsets[degree][1] : tc.dims[degree];
}

// Projection Tot_n -> C_n onto the leading column.
RationalMatrix leading_projection(const TotalComplex& tc, std::size_t degree) {
    const std::size_t chunk = leading_chunk(tc, degree);
    RationalMatrix p(chunk, tc.dims[degree]);
    for (std::size_t i = 0; i < chunk; ++i) p.set(i, tc.offsets[degree][0] + i, 1);
    return p;
}

} // namespace

MixedComplex mixed_complex(const Algebra& a, std::size_t max_degree, const ComputeOptions& opts) {
    ChainBasis cb(a, true);
    MixedComplex mc;
    mc.max_degree = max_degree;
    mc.dims.resize(max_degree + 1);
    for (std::size_t n = 0; n <= max_degree; ++n) {
        mc.dims[n] = cb.chain_dim(n);
        if (mc.dims[n] > opts.size_limit && !opts.force_size)
            throw SizeLimitError("degree " + std::to_string(n) + " needs " +
                                 std::to_string(mc.dims[n]) + " basis elements, above the cap of " +
                                 std::to_string(opts.size_limit));
    }
    mc.b.resize(max_degree + 1);
    mc.b[0] = RationalMatrix(0, mc.dims[0]);
    mc.B.resize(max_degree);
    auto fetch = [&](char kind, std::size_t n, std::size_t rows, std::size_t cols,
                     auto&& build) -> RationalMatrix {
        if (opts.cache) {
            const auto key = cache_key(a, kind, n);
            if (auto m = opts.cache->load(key); m && m->rows() == rows && m->cols() == cols)
                return std::move(*m);
        }
        RationalMatrix m = build();
        if (opts.cache) opts.cache->store(cache_key(a, kind, n), m);
        return m;
    };
    for (std::size_t n = 1; n <= max_degree; ++n)
        mc.b[n] = fetch('b', n, mc.dims[n - 1], mc.dims[n], [&] { return cb.b_matrix(n); });
    for (std::size_t n = 0; n < max_degree; ++n)
        mc.B[n] = fetch('B', n, mc.dims[n + 1], mc.dims[n], [&] { return cb.B_matrix(n); });

    for (std::size_t n = 1; n + 1 <= max_degree; ++n)
        if (!mc.b[n].times(mc.b[n + 1]).is_zero())
            throw MathError("mixed complex: b^2 != 0 at degree " + std::to_string(n + 1));
    for (std::size_t n = 0; n + 2 <= max_degree; ++n)
        if (!mc.B[n + 1].times(mc.B[n]).is_zero())
            throw MathError("mixed complex: B^2 != 0 at degree " + std::to_string(n));
    if (max_degree >= 1 && !mc.b[1].times(mc.B[0]).is_zero())
        throw MathError("mixed complex: bB != 0 at degree 0");
    for (std::size_t n = 1; n + 1 <= max_degree; ++n) {
        const RationalMatrix anti = mc.b[n + 1].times(mc.B[n]).plus(mc.B[n - 1].times(mc.b[n]));
        if (!anti.is_zero())
            throw MathError("mixed complex: bB + Bb != 0 at degree " + std::to_string(n));
    }
    return mc;
}

TotalComplex total_complex(const MixedComplex& mc) {
    TotalComplex tc;
    tc.max_degree = mc.max_degree;
    tc.dims.resize(mc.max_degree + 1, 0);
    tc.offsets.resize(mc.max_degree + 1);
    for (std::size_t n = 0; n <= mc.max_degree; ++n) {
        std::size_t off = 0;
        for (std::size_t p = 0; 2 * p <= n; ++p) {
            tc.offsets[n].push_back(off);
            off += mc.dims[n - 2 * p];
        }
        tc.dims[n] = off;
    }
    tc.d.resize(mc.max_degree + 1);
    tc.d[0] = RationalMatrix(0, tc.dims[0]);
    for (std::size_t n = 1; n <= mc.max_degree; ++n) {
        RationalMatrix dn(tc.dims[n - 1], tc.dims[n]);
        for (std::size_t p = 0; 2 * p <= n; ++p) {
            const std::size_t deg = n - 2 * p;
            if (deg >= 1) dn.insert_block(tc.offsets[n - 1][p], tc.offsets[n][p], mc.b[deg]);
            if (p >= 1) dn.insert_block(tc.offsets[n - 1][p - 1], tc.offsets[n][p], mc.B[deg]);
        }
        tc.d[n] = std::move(dn);
    }
    return tc;
}

RationalMatrix s_map(const TotalComplex& tc, std::size_t degree) {
    if (degree < 2) throw InputError("s_map: degree must be at least 2");
    if (degree > tc.max_degree) throw InputError("s_map: total complex not built this far");
    RationalMatrix s = raw_s(tc, degree);
    // S commutes with the total differential; check where both sides exist.
    if (degree >= 3) {
        const RationalMatrix lhs = tc.d[degree - 2].times(s);
        const RationalMatrix rhs = raw_s(tc, degree - 1).times(tc.d[degree]);
        if (!(lhs == rhs)) throw MathError("s_map does not commute with the total differential");
    }
    return s;
}

RationalMatrix i_map(const TotalComplex& tc, std::size_t degree) {
    const std::size_t chunk = leading_chunk(tc, degree);
    RationalMatrix inc(tc.dims[degree], chunk);
    for (std::size_t i = 0; i < chunk; ++i) inc.set(tc.offsets[degree][0] + i, i, 1);
    return inc;
}

namespace {

HomologyReport hc_report(const Algebra& a, std::size_t cutoff, const ComputeOptions& opts,
                         bool cohomology) {
    MixedComplex mc = mixed_complex(a, cutoff + 1, opts);
    TotalComplex tc = total_complex(mc);
    std::vector<std::size_t> ranks(cutoff + 2, 0);
    for (std::size_t n = 1; n <= cutoff + 1; ++n)
        ranks[n] = rank_checked(cohomology ? tc.d[n].transpose() : tc.d[n], opts.mod_check);
    HomologyReport rep;
    rep.theory = cohomology ? Theory::HC_co : Theory::HC;
    rep.cutoff = cutoff;
    rep.dims.resize(cutoff + 1);
    rep.reliable.resize(cutoff + 1);
    for (std::size_t n = 0; n <= cutoff; ++n) {
        rep.dims[n] = tc.dims[n] - ranks[n] - ranks[n + 1];
        rep.reliable[n] = n + 2 <= cutoff;
    }
    return rep;
}

} // namespace

HomologyReport hc_dims(const Algebra& a, std::size_t cutoff, const ComputeOptions& opts) {
    return hc_report(a, cutoff, opts, false);
}

HomologyReport hc_cohomology_dims(const Algebra& a, std::size_t cutoff, const ComputeOptions& opts) {
    return hc_report(a, cutoff, opts, true);
}

SBICertificate sbi_report(const Algebra& a, std::size_t cutoff, const ComputeOptions& opts) {
    MixedComplex mc = mixed_complex(a, cutoff + 1, opts);
    TotalComplex tc = total_complex(mc);

    std::vector<HomologySpace> hh(cutoff + 1), hc(cutoff + 1);
    for (std::size_t n = 0; n <= cutoff; ++n) {
        hh[n] = homology_space(mc.b[n], mc.b[n + 1]);
        hc[n] = homology_space(tc.d[n], tc.d[n + 1]);
    }

    std::vector<std::size_t> rank_i(cutoff + 1, 0);
    std::map<std::size_t, std::size_t> rank_s;    // degree n -> rank of S: HC_n -> HC_{n-2}
    std::map<std::size_t, std::size_t> rank_con;  // degree n -> rank of B: HC_n -> HH_{n+1}
    for (std::size_t n = 0; n <= cutoff; ++n) {
        const RationalMatrix ind = induced_on_homology(i_map(tc, n), hh[n], hc[n]);
        rank_i[n] = rank_checked(ind, opts.mod_check);
    }
    for (std::size_t n = 2; n <= cutoff; ++n) {
        const RationalMatrix ind = induced_on_homology(s_map(tc, n), hc[n], hc[n - 2]);
        rank_s[n] = rank_checked(ind, opts.mod_check);
    }
    for (std::size_t n = 0; n + 1 <= cutoff; ++n) {
        const RationalMatrix conn = mc.B[n].times(leading_projection(tc, n));
        const RationalMatrix ind = induced_on_homology(conn, hc[n], hh[n + 1]);
        rank_con[n] = rank_checked(ind, opts.mod_check);
    }

    SBICertificate cert;
    cert.cutoff = cutoff;
    cert.all_exact = true;
    auto push = [&](SBISlot slot, std::size_t degree, std::size_t rank_in, std::size_t ker_out) {
        SBINode node{slot, degree, rank_in, ker_out, rank_in == ker_out};
        cert.all_exact = cert.all_exact && node.exact;
        cert.nodes.push_back(node);
    };
    for (std::size_t m = 0; m <= cutoff; ++m) {
        // HH_m: connecting map in, I out.
        push(SBISlot::HochschildNode, m, m >= 1 ? rank_con[m - 1] : 0, hh[m].dim() - rank_i[m]);
        // HC_m: I in, S out.
        push(SBISlot::CyclicNodeI, m, rank_i[m], hc[m].dim() - (m >= 2 ? rank_s[m] : 0));
        // HC_m: S in, connecting map out. Only interior degrees are checkable.
        if (m + 2 <= cutoff)
            push(SBISlot::CyclicNodeS, m, rank_s[m + 2], hc[m].dim() - rank_con[m]);
    }
    if (cutoff >= 1)
        cert.unchecked.push_back("HC_" + std::to_string(cutoff - 1) +
                                 " (S in, B out): needs HC_" + std::to_string(cutoff + 1));
    cert.unchecked.push_back("HC_" + std::to_string(cutoff) + " (S in, B out): needs HC_" +
                             std::to_string(cutoff + 2));
    return cert;
}

namespace {

HomologyReport hp_report(const Algebra& a, std::size_t cutoff, const ComputeOptions& opts,
                         bool cohomology) {
    const std::size_t depth = std::min<std::size_t>(cutoff, 4);
    MixedComplex mc = mixed_complex(a, depth + 1, opts);
    TotalComplex tc = total_complex(mc);

    std::vector<HomologySpace> node(depth + 1);
    for (std::size_t n = 0; n <= depth; ++n)
        node[n] = cohomology ? homology_space(tc.d[n + 1].transpose(), tc.d[n].transpose())
                             : homology_space(tc.d[n], tc.d[n + 1]);

    std::map<std::size_t, RationalMatrix> sind; // keyed by upper degree n: HC_n <-> HC_{n-2}
    for (std::size_t n = 2; n <= depth; ++n) {
        const RationalMatrix s = s_map(tc, n);
        sind.emplace(n, cohomology ? induced_on_homology(s.transpose(), node[n - 2], node[n])
                                   : induced_on_homology(s, node[n], node[n - 2]));
    }

    StabilizationCertificate cert;
    for (std::size_t n = 0; n + 2 <= depth; ++n) {
        const std::size_t r = rank_checked(sind.at(n + 2), opts.mod_check);
        cert.tested_degrees.push_back(n);
        cert.iso_flags.push_back(r == node[n + 2].dim() && node[n + 2].dim() == node[n].dim());
    }

    cert.hh_window_lo = 1;
    cert.hh_window_hi = cutoff >= 3 ? cutoff - 2 : 0;
    if (cert.hh_window_hi >= cert.hh_window_lo) {
        const HomologyReport hh = cohomology ? hh_cohomology_dims(a, cert.hh_window_hi, opts)
                                             : hh_dims(a, cert.hh_window_hi, opts);
        cert.hh_window_vanishes = true;
        for (std::size_t n = cert.hh_window_lo; n <= cert.hh_window_hi; ++n) {
            cert.hh_window_dims.push_back(hh.dims[n]);
            cert.hh_window_vanishes = cert.hh_window_vanishes && hh.dims[n] == 0;
        }
    }

    bool consecutive = false;
    for (std::size_t i = 0; i + 1 < cert.iso_flags.size(); ++i)
        consecutive = consecutive || (cert.iso_flags[i] && cert.iso_flags[i + 1]);
    cert.conclusive = consecutive && cert.hh_window_vanishes;

    // Iterated-S image ranks, the partial data for inconclusive runs.
    if (depth >= 4) {
        const RationalMatrix composite = cohomology ? sind.at(4).times(sind.at(2))
                                                    : sind.at(2).times(sind.at(4));
        cert.stable_even_rank = rank_checked(composite, opts.mod_check);
    } else if (depth >= 2) {
        cert.stable_even_rank = rank_checked(sind.at(2), opts.mod_check);
    } else {
        cert.stable_even_rank = node[0].dim();
    }
    if (depth >= 3)
        cert.stable_odd_rank = rank_checked(sind.at(3), opts.mod_check);
    else if (depth >= 1)
        cert.stable_odd_rank = node[1].dim();

    std::size_t hp0, hp1;
    if (cert.conclusive) {
        hp0 = depth >= 2 ? node[2].dim() : node[0].dim();
        hp1 = depth >= 3 ? node[3].dim() : (depth >= 1 ? node[1].dim() : 0);
    } else {
        hp0 = cert.stable_even_rank;
        hp1 = cert.stable_odd_rank;
    }

    HomologyReport rep;
    rep.theory = cohomology ? Theory::HP_co : Theory::HP;
    rep.cutoff = cutoff;
    rep.dims.resize(cutoff + 1);
    rep.reliable.resize(cutoff + 1);
    for (std::size_t n = 0; n <= cutoff; ++n) {
        rep.dims[n] = n % 2 == 0 ? hp0 : hp1;
        rep.reliable[n] = cert.conclusive;
    }
    rep.certificate = std::move(cert);
    return rep;
}

} // namespace

HomologyReport hp_dims(const Algebra& a, std::size_t cutoff, const ComputeOptions& opts) {
    return hp_report(a, cutoff, opts, false);
}

HomologyReport hp_cohomology_dims(const Algebra& a, std::size_t cutoff, const ComputeOptions& opts) {
    return hp_report(a, cutoff, opts, true);
}

} // namespace cyclo
