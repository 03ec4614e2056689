#pragma once

#include <utility>
#include <vector>

#include "pflab/linalg.hpp"
#include "pflab/partition.hpp"
#include "pflab/poly.hpp"

namespace pflab {

/// Element of so(2N) in the block form [[A, B], [C, -A^t]] with B, C
/// antisymmetric; equivalently M*J antisymmetric for J = [[0,I],[I,0]].
struct SoMatrix {
    int half = 0;            // N
    Matrix<Poly> entries;    // 2N x 2N

    int size() const { return 2 * half; }
};

/// so-form check: M*J antisymmetric.
bool so_form_ok(const SoMatrix& m);
bool so_form_ok_int(const Matrix<int>& m);

/// X^-_{i,j} = E_{i,j} - E_{j+n, i+n}; valid for 1 <= i, j <= n.
SoMatrix basis_xminus(int i, int j, int n);

/// X^+_{i,j} = E_{i, j+n} - E_{j, i+n}; valid for 1 <= i < j <= n.
SoMatrix basis_xplus(int i, int j, int n);

/// Generic symbolic element: independent variables A[i,j] (all i, j <= n),
/// B[i,j] and C[i,j] (i < j); dependent entries filled by the so-form.
SoMatrix generic_g(int n);

/// Placement of realized blocks: block alpha of half-width w gets top rows
/// {offset .. offset+w-1} and bottom rows {N+offset .. N+offset+w-1}. A Type I
/// +/- pair shares one so-block (the + minor on top, the - minor on the
/// bottom). All indices 1-based.
struct BlockLayout {
    struct Entry {
        LegoBlock block;
        int offset = 0;      // top-half start of the owning so-block
        int half_width = 0;  // half-width of the owning so-block
    };
    int half = 0;  // N of the realized algebra
    std::vector<Entry> entries;

    /// Global 1-based row (= column) indices of the block's associated minor.
    static std::vector<int> minor_indices(const Entry& e, int half);
};

/// The nilpotent attached to a realized block list, entries in {0, +-1}.
struct Nilpotent {
    Partition realized;
    BlockLayout layout;
    Matrix<int> x;
};

Nilpotent realize_nilpotent(const Realization& r);

/// Nilpotent for a partition whose pairing needs no splitting (every odd pair
/// already of the form [2a+1, 1]); throws UnsupportedPair otherwise.
SoMatrix build_nilpotent(const Partition& p);

Matrix<Poly> int_to_poly(const Matrix<int>& m);

/// (M*J, det J) with J = [[0,I],[I,0]]: the column-block swap making the
/// so-form antisymmetric; det(M) = sign * det(M*J), sign = (-1)^N.
std::pair<Matrix<Poly>, int> antisymmetrize(const SoMatrix& m);

/// Pfaffian of an antisymmetric polynomial matrix, Pf([[0,a],[-a,0]]) = a.
Poly pfaffian(const Matrix<Poly>& m);

/// Exact symbolic determinant (subset-memoized Laplace, switching to the
/// complementary-minor expansion on larger matrices).
Poly determinant(const Matrix<Poly>& m);

/// Numeric so(2n) sample over a prime field: independent coordinates drawn
/// in canonical order (A row-major, then B, then C), dependents by so-form.
Matrix<uint64_t> sample_g_fp(int n, const PrimeField& f, SplitMix64& rng);

/// Jordan block sizes of a nilpotent integer matrix, descending (computed
/// from ranks of powers over Q).
std::vector<int> jordan_type(const Matrix<int>& x);

}  // namespace pflab
