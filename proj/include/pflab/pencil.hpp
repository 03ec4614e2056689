#pragma once

#include <cstdint>
#include <vector>

#include "pflab/partition.hpp"
#include "pflab/somatrix.hpp"

namespace pflab {

/// The homogeneous pencil s*X + t*g + lambda*I over the realized algebra.
/// X is realized from the partition's pairing with every odd pair reduced to
/// the [2a+1, 1] form (pairs with b > 0 split, appending a (1,1) pair), so
/// [4,4,3,1] stays 12x12 while [7,5,2,2] realizes at 18x18.
struct Pencil {
    Partition original;
    Nilpotent nil;  // realized nilpotent + layout
    SoMatrix g;     // symbolic generic element at the realized size

    int half() const { return nil.layout.half; }
    int size() const { return 2 * half(); }

    /// Materialized pencil matrix (small sizes; used by tests and printing).
    Matrix<Poly> matrix() const;
};

Pencil build_pencil(const Partition& p);

/// Exact coefficient of s^{s_pow} t^{t_pow} lambda^{2N - s_pow - t_pow} in
/// det(pencil), as a polynomial in the g-variables. Computed per coefficient:
/// principal minors supply the lambda split, column multilinearity the (s, t)
/// split; the X-columns are expanded first (they are sparse).
Poly pencil_coefficient(const Pencil& p, int s_pow, int t_pow);

/// c_{2k}: the coefficient of s^{2k-chi} t^{chi} lambda^{2(N-k)} with
/// chi = chi(original, k). Requires 1 <= k <= N of the original partition.
Poly extract_c(const Pencil& p, int k);

struct ValuationRow {
    int k = 0;         // 1..N (original)
    int chi = 0;       // chi_{2k}
    bool lower_bound_ok = false;  // coefficients below chi all vanish
    bool achieved = false;        // the chi coefficient is nonzero (some trial)
};

struct ValuationReport {
    std::vector<ValuationRow> rows;
    int trials = 0;  // 0 for the exact mode
    bool pass = false;
};

/// Exact chi check: for each k the t-valuation of the lambda^{2(N-k)}
/// coefficient is >= chi_{2k} as a polynomial identity, with equality.
ValuationReport check_valuation(const Pencil& p);

/// All coefficients C[a][b] of s^a t^b lambda^{2N-a-b} in det(pencil) for one
/// numeric g over a prime field, via bivariate Newton interpolation at
/// lambda = 1 (joint homogeneity recovers the lambda power).
struct FpCoeffTable {
    int n = 0;  // 2N
    std::vector<uint64_t> c;  // (n+1) x (n+1), row-major in (a, b)

    uint64_t at(int a, int b) const { return c[static_cast<size_t>(a) * (n + 1) + b]; }
};

FpCoeffTable pencil_coeff_table_fp(const Matrix<int>& x, const Matrix<uint64_t>& g,
                                   const PrimeField& f);

/// Probabilistic chi check: the lower bound must hold in every trial, the
/// equality in at least one.
ValuationReport check_valuation_fp(const Partition& p, int trials, uint64_t seed,
                                   const PrimeField& f);

}  // namespace pflab
