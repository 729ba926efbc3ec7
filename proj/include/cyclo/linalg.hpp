#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cyclo/matrix.hpp"

namespace cyclo {

// Rank over Q. Shape-only degenerate matrices have rank 0.
std::size_t rank(const RationalMatrix& m);

// Rank of the reduction mod p. Throws BadPrimeError when p divides a stored denominator.
std::size_t modular_rank(const RationalMatrix& m, std::uint64_t p);

// Exact rank, cross-checked against modular_rank at `num_primes` random primes > 10^6
// when mod_check is set. A prime that drops rank is resampled; a persistent mismatch
// (or a modular rank above the exact one) throws ModularMismatchError.
std::size_t rank_checked(const RationalMatrix& m, bool mod_check, int num_primes = 3);

// Kernel basis, each vector normalized so its first nonzero coordinate is 1.
// Deterministic: leftmost-pivot reduced echelon form.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);
std::vector<SparseVec> kernel_basis_sparse(const RationalMatrix& m);

// dim ker(d_n) - rank(d_next) for consecutive differentials d_n: C_n -> C_{n-1},
// d_next: C_{n+1} -> C_n. Throws DimensionMismatchError / CompositionNonzeroError.
std::size_t homology_dim(const RationalMatrix& d_n, const RationalMatrix& d_next);
std::size_t homology_dim_checked(const RationalMatrix& d_n, const RationalMatrix& d_next,
                                 bool mod_check);

// Particular solution of a x = rhs with free variables set to zero; nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& rhs);

// Batched solves: column j of the result solves a x = rhs[:,j]. nullopt if any column
// is inconsistent.
std::optional<RationalMatrix> solve_multi(const RationalMatrix& a, const RationalMatrix& rhs);

// Echelonized basis of the column space; deterministic.
std::vector<SparseVec> column_space_basis(const RationalMatrix& m);

bool is_prime_u64(std::uint64_t n);
std::uint64_t random_prime_above(std::uint64_t lo, std::mt19937_64& rng);

// Deterministic seed derived from the matrix content, so cross-check primes (and
// hence reports) are reproducible run to run.
std::uint64_t content_seed(const RationalMatrix& m);

} // namespace cyclo
