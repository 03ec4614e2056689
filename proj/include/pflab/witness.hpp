#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pflab/pencil.hpp"

namespace pflab {

/// Row/column bookkeeping of the unique optimal elimination over the first j
/// blocks. Indices are global and 1-based. `elim_*` lists the rows/columns
/// consumed by s-choices (2k - j in total); for a Type II block they follow
/// the canonical valid choice, whose consumed row/column set (together with
/// the one lambda left on the diagonal) is choice-independent.
struct Elimination {
    struct BlockElim {
        LegoBlock block;
        std::vector<int> elim_rows;
        std::vector<int> elim_cols;
        int surv_row = 0;
        int surv_col = 0;
    };
    int j = 0;
    std::vector<BlockElim> blocks;
    std::vector<int> surviving_rows;  // sorted
    std::vector<int> surviving_cols;  // sorted
};

/// The first j blocks of the sorted Lego set; validates the counting identity
/// sum s_beta - b_j = k_j. Throws NotAConjectureIndex unless j is even and
/// p_j > p_{j+1}.
std::vector<LegoBlock> greedy_select(const LegoSet& set, int j);

/// Optimal elimination of the first j realized blocks of the pencil.
/// Refuses (throws) when the first j blocks do not cover the first j parts,
/// which only happens at j = 2m with a swallowed 1-part (the Pfaffian case).
Elimination eliminate(const Pencil& p, int j);

/// The residual j x j minor z = g[surviving rows; surviving cols] together
/// with its antisymmetric column permutation. Throws PairingViolation if the
/// surviving rows and columns fail to correspond under i <-> i +- N.
struct ResidualMinor {
    std::vector<int> rows;  // sorted, 1-based
    std::vector<int> cols;  // sorted, 1-based
    Matrix<Poly> z;         // columns in sorted order
    Matrix<Poly> z_antisym; // column l holds g[., pair(rows[l])]
    int col_perm_sign = 1;  // det(z_antisym) = col_perm_sign * det(z)
};

ResidualMinor residual_minor(const SoMatrix& g, const Elimination& elim);

/// The square-root witness 2^{b_j/2} * Pf(z_antisym), sign-normalized.
/// Throws OddTypeIICount when b_j is odd.
Poly witness_sqrt(const ResidualMinor& z, int b_j);

enum class VerifyMode { Exact, Numeric };

struct WitnessReport {
    std::string partition;
    int j = 0;
    long k_j = 0;
    int b_j = 0;
    bool classical = false;  // j = 2m Pfaffian route
    VerifyMode mode = VerifyMode::Exact;
    bool pass = false;
    std::string failure;  // first violated identity, empty on pass
    int eps = 0;          // observed = eps * 2^{b_j} * Pf(z~)^2
    double ms = 0.0;

    // Exact mode artifacts.
    Poly observed;
    Poly det_z;
    Poly pfaffian_z;
    Poly predicted;      // 2^{b_j} * Pf(z~)^2
    Poly sqrt_observed;  // poly_sqrt(eps * observed)
    std::vector<int> surviving_rows;
    std::vector<int> surviving_cols;

    // Numeric mode parameters.
    int trials = 0;
    uint64_t seed = 0;
    uint64_t prime = 0;
};

/// The witness polynomial 2^{b_j/2} Pf(z~) alone, without verifying the
/// coefficient identity (cheap at any machinery index; the classical j = 2m
/// witness is the full symbolic Pfaffian and grows as (2N-1)!!).
struct WitnessPolynomial {
    Poly value;
    int b_j = 0;
    bool classical = false;
};
WitnessPolynomial witness_polynomial(const Partition& p, int j);

/// Exact verification of the conjecture identity at index j: the observed
/// c_{k_j} equals +-2^{b_j} det(z~) and poly_sqrt certifies the square.
/// j = 2m runs the classical case (observed = det g, witness = Pf(gJ)).
WitnessReport verify_exact(const Partition& p, int j);

/// Polynomial-identity-testing verification over a prime field: every trial
/// must satisfy observed = eps * w^2 with one sign eps consistent across
/// trials, and at least one trial must pin the sign (w != 0).
WitnessReport verify_numeric(const Partition& p, int j, int trials, uint64_t seed,
                             const PrimeField& f);

}  // namespace pflab
