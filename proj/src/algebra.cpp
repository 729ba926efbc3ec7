#include "cyclo/algebra.hpp"

#include <algorithm>

#include "cyclo/errors.hpp"
#include "cyclo/linalg.hpp"

namespace cyclo {

namespace {
const SparseVec kEmpty;

SparseVec basis_vec(std::size_t i) { return {{i, Rational(1)}}; }

void accumulate(std::map<std::size_t, Rational>& acc, const SparseVec& v, const Rational& scale) {
    for (const auto& [k, c] : v) {
        auto [it, inserted] = acc.try_emplace(k, c * scale);
        if (!inserted) {
            it->second += c * scale;
            if (it->second == 0) acc.erase(it);
        } else if (it->second == 0) {
            acc.erase(it);
        }
    }
}

SparseVec collect(std::map<std::size_t, Rational>&& acc) {
    SparseVec out;
    out.reserve(acc.size());
    for (auto& [k, v] : acc) out.emplace_back(k, std::move(v));
    return out;
}
} // namespace

Algebra::Algebra(std::size_t dim, std::vector<std::string> labels, std::map<Key, SparseVec> table,
                 std::optional<std::vector<Rational>> unit)
    : dim_(dim), labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
    if (dim_ == 0) throw InputError("algebras of dimension 0 are rejected");
    if (labels_.empty()) {
        labels_.reserve(dim_);
        for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
    }
    if (labels_.size() != dim_) throw InputError("label count does not match dimension");
    for (auto it = table_.begin(); it != table_.end();) {
        const std::size_t i = it->first / dim_, j = it->first % dim_;
        if (i >= dim_ || j >= dim_) throw InputError("structure-constant index out of range");
        SparseVec& v = it->second;
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [k, c] : v) {
            if (k >= dim_) throw InputError("structure-constant target index out of range");
            if (c == 0) throw InputError("structure table stores a zero coefficient");
        }
        it = v.empty() ? table_.erase(it) : std::next(it);
    }
    if (unit_ && unit_->size() != dim_) throw InputError("unit vector length does not match dimension");
    if (unit_ && std::all_of(unit_->begin(), unit_->end(), [](const Rational& c) { return c == 0; }))
        throw InputError("unit vector is zero");
}

const std::vector<Rational>& Algebra::unit() const {
    if (!unit_) throw NotUnitalError("algebra has no unit");
    return *unit_;
}

const SparseVec& Algebra::product(std::size_t i, std::size_t j) const {
    auto it = table_.find(static_cast<Key>(i) * dim_ + j);
    return it == table_.end() ? kEmpty : it->second;
}

SparseVec Algebra::multiply(const SparseVec& u, const SparseVec& v) const {
    std::map<std::size_t, Rational> acc;
    for (const auto& [i, ci] : u)
        for (const auto& [j, cj] : v) accumulate(acc, product(i, j), ci * cj);
    return collect(std::move(acc));
}

std::vector<Rational> Algebra::multiply_dense(const std::vector<Rational>& u,
                                              const std::vector<Rational>& v) const {
    return to_dense(multiply(to_sparse(u), to_sparse(v)), dim_);
}

Algebra matrix_algebra(std::size_t n) {
    if (n == 0) throw InputError("matrix_algebra: n must be at least 1");
    const std::size_t d = n * n;
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    std::vector<std::string> labels;
    labels.reserve(d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    std::map<Algebra::Key, SparseVec> table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                table[static_cast<Algebra::Key>(idx(i, j)) * d + idx(j, l)] = basis_vec(idx(i, l));
    std::vector<Rational> unit(d, Rational(0));
    for (std::size_t i = 0; i < n; ++i) unit[idx(i, i)] = 1;
    return Algebra(d, std::move(labels), std::move(table), std::move(unit));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
    const std::size_t d = a.dim() + b.dim();
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::map<Algebra::Key, SparseVec> table;
    for (const auto& [key, vec] : a.table()) {
        const std::size_t i = key / a.dim(), j = key % a.dim();
        table[static_cast<Algebra::Key>(i) * d + j] = vec;
    }
    for (const auto& [key, vec] : b.table()) {
        const std::size_t i = key / b.dim() + a.dim(), j = key % b.dim() + a.dim();
        SparseVec shifted;
        shifted.reserve(vec.size());
        for (const auto& [k, c] : vec) shifted.emplace_back(k + a.dim(), c);
        table[static_cast<Algebra::Key>(i) * d + j] = std::move(shifted);
    }
    std::optional<std::vector<Rational>> unit;
    if (a.is_unital() && b.is_unital()) {
        unit.emplace(a.unit());
        unit->insert(unit->end(), b.unit().begin(), b.unit().end());
    }
    return Algebra(d, std::move(labels), std::move(table), std::move(unit));
}

Algebra unitalization(const Algebra& a) {
    const std::size_t d = a.dim() + 1;
    std::vector<std::string> labels = a.labels();
    labels.push_back("1");
    std::map<Algebra::Key, SparseVec> table;
    for (const auto& [key, vec] : a.table()) {
        const std::size_t i = key / a.dim(), j = key % a.dim();
        table[static_cast<Algebra::Key>(i) * d + j] = vec;
    }
    const std::size_t u = a.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        table[static_cast<Algebra::Key>(u) * d + i] = basis_vec(i);
        table[static_cast<Algebra::Key>(i) * d + u] = basis_vec(i);
    }
    table[static_cast<Algebra::Key>(u) * d + u] = basis_vec(u);
    std::vector<Rational> unit(d, Rational(0));
    unit[u] = 1;
    return Algebra(d, std::move(labels), std::move(table), std::move(unit));
}

std::pair<Algebra, BlockDecomposition> truncated_convolution(CompactGroup group, std::size_t cutoff) {
    if (group == CompactGroup::S1) {
        const std::size_t blocks = 2 * cutoff + 1;
        std::vector<std::string> labels;
        labels.reserve(blocks);
        for (long n = -static_cast<long>(cutoff); n <= static_cast<long>(cutoff); ++n)
            labels.push_back("chi" + std::to_string(n));
        std::map<Algebra::Key, SparseVec> table;
        for (std::size_t i = 0; i < blocks; ++i)
            table[static_cast<Algebra::Key>(i) * blocks + i] = basis_vec(i);
        std::vector<Rational> unit(blocks, Rational(1));
        BlockDecomposition bd;
        for (std::size_t i = 0; i < blocks; ++i) {
            bd.block_sizes.push_back(1);
            bd.block_offsets.push_back(i);
        }
        return {Algebra(blocks, std::move(labels), std::move(table), std::move(unit)), std::move(bd)};
    }
    if (cutoff == 0) throw InputError("truncated_convolution: SU2 needs cutoff >= 1");
    Algebra acc = matrix_algebra(1);
    BlockDecomposition bd;
    bd.block_sizes.push_back(1);
    bd.block_offsets.push_back(0);
    for (std::size_t n = 2; n <= cutoff; ++n) {
        bd.block_offsets.push_back(acc.dim());
        bd.block_sizes.push_back(n);
        acc = direct_sum(acc, matrix_algebra(n));
    }
    std::vector<std::string> labels;
    for (std::size_t blk = 0; blk < bd.block_sizes.size(); ++blk) {
        const std::size_t n = bd.block_sizes[blk];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                labels.push_back("V" + std::to_string(n) + ":e" + std::to_string(i + 1) +
                                 std::to_string(j + 1));
    }
    Algebra out(acc.dim(), std::move(labels), acc.table(),
                acc.is_unital() ? std::optional<std::vector<Rational>>(acc.unit()) : std::nullopt);
    return {std::move(out), std::move(bd)};
}

Algebra dual_numbers() {
    // x^2 = 0 on a one-dimensional algebra, then adjoin the unit.
    Algebra line(1, {"x"}, {}, std::nullopt);
    return unitalization(line);
}

std::size_t commutator_quotient_dim(const Algebra& a, bool mod_check) {
    const std::size_t d = a.dim();
    RationalMatrix commutators(d, d * (d - 1) / 2);
    std::size_t col = 0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j, ++col) {
            std::map<std::size_t, Rational> acc;
            accumulate(acc, a.product(i, j), Rational(1));
            accumulate(acc, a.product(j, i), Rational(-1));
            for (const auto& [k, c] : acc)
                if (c != 0) commutators.set(k, col, c);
        }
    }
    return d - rank_checked(commutators, mod_check);
}

std::vector<TraceFunctional> trace_space_basis(const Algebra& a) {
    const std::size_t d = a.dim();
    // tau(b_i b_j) = tau(b_j b_i) for all i < j, as linear conditions on tau.
    RationalMatrix sys(d * (d - 1) / 2, d);
    std::size_t row = 0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j, ++row) {
            std::map<std::size_t, Rational> acc;
            accumulate(acc, a.product(i, j), Rational(1));
            accumulate(acc, a.product(j, i), Rational(-1));
            for (const auto& [k, c] : acc)
                if (c != 0) sys.set(row, k, c);
        }
    }
    std::vector<TraceFunctional> out;
    for (auto& v : kernel_basis(sys)) out.push_back(TraceFunctional{std::move(v)});
    return out;
}

AssociativityReport check_associative(const Algebra& a) {
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const SparseVec& ij = a.product(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                std::map<std::size_t, Rational> acc;
                for (const auto& [s, c] : ij) accumulate(acc, a.product(s, k), c);
                for (const auto& [s, c] : a.product(j, k)) accumulate(acc, a.product(i, s), -c);
                if (!acc.empty()) return {false, {i, j, k}};
            }
        }
    }
    return {};
}

UnitReport check_unit(const Algebra& a) {
    UnitReport rep;
    if (!a.is_unital()) return rep;
    rep.has_unit = true;
    rep.ok = true;
    const SparseVec u = to_sparse(a.unit());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const SparseVec bi = basis_vec(i);
        if (a.multiply(u, bi) != bi || a.multiply(bi, u) != bi) {
            rep.ok = false;
            rep.witness = i;
            return rep;
        }
    }
    return rep;
}

bool is_trace(const Algebra& a, const TraceFunctional& tau) {
    if (tau.coefficients.size() != a.dim()) return false;
    auto value = [&](const SparseVec& v) {
        Rational acc = 0;
        for (const auto& [k, c] : v) acc += c * tau.coefficients[k];
        return acc;
    };
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (value(a.product(i, j)) != value(a.product(j, i))) return false;
    return true;
}

void validate_blocks(const Algebra& a, const BlockDecomposition& blocks) {
    if (blocks.block_sizes.size() != blocks.block_offsets.size())
        throw DecompositionMismatchError("block sizes and offsets differ in length");
    std::size_t expect_offset = 0;
    for (std::size_t b = 0; b < blocks.block_sizes.size(); ++b) {
        if (blocks.block_offsets[b] != expect_offset)
            throw DecompositionMismatchError("block offsets are not contiguous");
        expect_offset += blocks.block_sizes[b] * blocks.block_sizes[b];
    }
    if (expect_offset != a.dim())
        throw DecompositionMismatchError("block sizes do not fill the algebra dimension");
    // Products must follow the matrix-unit pattern inside blocks and vanish across.
    auto block_of = [&](std::size_t idx) {
        for (std::size_t b = 0; b < blocks.block_sizes.size(); ++b) {
            const std::size_t lo = blocks.block_offsets[b];
            if (idx >= lo && idx < lo + blocks.block_sizes[b] * blocks.block_sizes[b]) return b;
        }
        throw DecompositionMismatchError("index outside every block");
    };
    for (std::size_t x = 0; x < a.dim(); ++x) {
        for (std::size_t y = 0; y < a.dim(); ++y) {
            const std::size_t bx = block_of(x), by = block_of(y);
            const SparseVec& prod = a.product(x, y);
            if (bx != by) {
                if (!prod.empty())
                    throw DecompositionMismatchError("cross-block product is nonzero");
                continue;
            }
            const std::size_t n = blocks.block_sizes[bx], lo = blocks.block_offsets[bx];
            const std::size_t i = (x - lo) / n, j = (x - lo) % n;
            const std::size_t k = (y - lo) / n, l = (y - lo) % n;
            const SparseVec expect =
                (j == k) ? basis_vec(lo + i * n + l) : SparseVec{};
            if (prod != expect)
                throw DecompositionMismatchError("in-block products do not follow matrix units");
        }
    }
}

std::uint64_t content_hash(const Algebra& a) {
    const std::uint64_t fnv_prime = 1099511628211ULL;
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= fnv_prime;
    };
    auto mix_rat = [&](const Rational& v) {
        mix(mpz_fdiv_ui(v.get_num().get_mpz_t(), 0xFFFFFFFBULL));
        mix(mpz_fdiv_ui(v.get_den().get_mpz_t(), 0xFFFFFFFBULL));
        mix(sgn(v) < 0 ? 1 : 0);
    };
    mix(a.dim());
    for (const auto& s : a.labels())
        for (char ch : s) mix(static_cast<unsigned char>(ch));
    if (a.is_unital())
        for (const auto& v : a.unit()) mix_rat(v);
    for (const auto& [key, vec] : a.table()) {
        mix(key);
        for (const auto& [k, c] : vec) {
            mix(k);
            mix_rat(c);
        }
    }
    return h;
}

} // namespace cyclo
