#pragma once

#include <cstdint>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "pflab/error.hpp"
#include "pflab/fp.hpp"
#include "pflab/poly.hpp"
#include "pflab/rational.hpp"

namespace pflab {

/// Dense row-major matrix, 0-based access.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, T fill = T{})
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const T& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

// Ring adapters for the generic determinant/pfaffian routines.

struct PolyRing {
    using Value = Poly;
    Value zero() const { return {}; }
    Value one() const { return Poly::constant(1); }
    bool is_zero(const Value& v) const { return v.is_zero(); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }
};

struct RationalRing {
    using Value = Rational;
    Value zero() const { return 0; }
    Value one() const { return 1; }
    bool is_zero(const Value& v) const { return sgn(v) == 0; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }
    Value inv(const Value& a) const {
        if (sgn(a) == 0) throw Error("division by zero");
        return 1 / a;
    }
};

class FpRing {
public:
    using Value = uint64_t;
    explicit FpRing(const PrimeField& f) : f_(f) {}
    const PrimeField& field() const { return f_; }
    Value zero() const { return 0; }
    Value one() const { return 1; }
    bool is_zero(Value v) const { return v == 0; }
    Value add(Value a, Value b) const { return f_.add(a, b); }
    Value sub(Value a, Value b) const { return f_.sub(a, b); }
    Value mul(Value a, Value b) const { return f_.mul(a, b); }
    Value neg(Value a) const { return f_.neg(a); }
    Value inv(Value a) const { return f_.inv(a); }

private:
    PrimeField f_;
};

namespace detail {

template <typename R>
typename R::Value det_expand(const R& ring, const Matrix<typename R::Value>& m, int row,
                             uint32_t mask, std::unordered_map<uint32_t, typename R::Value>& memo) {
    using V = typename R::Value;
    if (mask == 0) return ring.one();
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    V acc = ring.zero();
    int pos = 0;
    const int n = m.cols();
    for (int c = 0; c < n; ++c) {
        if (!(mask & (1u << c))) continue;
        const V& entry = m(row, c);
        if (!ring.is_zero(entry)) {
            V sub = det_expand(ring, m, row + 1, mask & ~(1u << c), memo);
            V term = ring.mul(entry, sub);
            acc = (pos % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
        }
        ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
}

inline void first_combination(std::vector<int>& comb, int k) {
    comb.resize(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
}

inline bool next_combination(std::vector<int>& comb, int n) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Determinant by Laplace expansion along rows, minors memoized on the
/// surviving column mask. Exact for any ring; effective when rows are sparse.
template <typename R>
typename R::Value determinant_laplace(const R& ring, const Matrix<typename R::Value>& m) {
    const int n = m.rows();
    if (n != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    if (n > 30) throw InvalidInput("matrix too large for subset expansion");
    if (n == 0) return ring.one();
    std::unordered_map<uint32_t, typename R::Value> memo;
    memo.reserve(1u << n);
    return detail::det_expand(ring, m, 0, (1u << n) - 1, memo);
}

/// Determinant by expansion in complementary minors across the top and bottom
/// halves of the row set. Same result as determinant_laplace with far smaller
/// transient memory on large symbolic matrices.
template <typename R>
typename R::Value determinant_split(const R& ring, const Matrix<typename R::Value>& m) {
    const int n = m.rows();
    if (n != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    if (n == 0) return ring.one();
    if (n == 1) return m(0, 0);
    const int h = n / 2;

    Matrix<typename R::Value> top(h, n), bottom(n - h, n);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < n; ++j) top(i, j) = m(i, j);
    for (int i = h; i < n; ++i)
        for (int j = 0; j < n; ++j) bottom(i - h, j) = m(i, j);

    typename R::Value acc = ring.zero();
    PolyAccumulator poly_acc;
    constexpr bool use_poly_acc = std::is_same_v<R, PolyRing>;
    std::vector<int> cols;
    detail::first_combination(cols, h);
    do {
        Matrix<typename R::Value> a(h, h), b(n - h, n - h);
        std::vector<char> in(n, 0);
        long colsum = 0;
        for (int j = 0; j < h; ++j) {
            in[cols[j]] = 1;
            colsum += cols[j] + 1;
            for (int i = 0; i < h; ++i) a(i, j) = top(i, cols[j]);
        }
        int cj = 0;
        for (int c = 0; c < n; ++c) {
            if (in[c]) continue;
            for (int i = 0; i < n - h; ++i) b(i, cj) = bottom(i, c);
            ++cj;
        }
        typename R::Value da = determinant_laplace(ring, a);
        if (ring.is_zero(da)) continue;
        typename R::Value db = determinant_laplace(ring, b);
        if (ring.is_zero(db)) continue;
        const long rowsum = static_cast<long>(h) * (h + 1) / 2;
        const bool negate = (rowsum + colsum) % 2 != 0;
        if constexpr (use_poly_acc) {
            poly_acc.add_product(da, db, negate);
        } else {
            typename R::Value prod = ring.mul(da, db);
            acc = negate ? ring.sub(acc, prod) : ring.add(acc, prod);
        }
    } while (detail::next_combination(cols, n));
    if constexpr (use_poly_acc) return poly_acc.take();
    return acc;
}

/// Fraction-free Bareiss elimination; every division is exact over Z.
inline BigInt determinant_bareiss(Matrix<BigInt> m) {
    const int n = m.rows();
    if (n != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    if (n == 0) return 1;
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (sgn(m(k, k)) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (sgn(m(i, k)) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : BigInt(-m(n - 1, n - 1));
}

/// Gaussian elimination over a field ring (needs inv); returns 0 on singular.
template <typename F>
typename F::Value determinant_gauss(const F& f, Matrix<typename F::Value> m) {
    const int n = m.rows();
    if (n != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    typename F::Value det = f.one();
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!f.is_zero(m(i, k))) {
                pivot = i;
                break;
            }
        if (pivot < 0) return f.zero();
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            det = f.neg(det);
        }
        det = f.mul(det, m(k, k));
        typename F::Value inv = f.inv(m(k, k));
        for (int i = k + 1; i < n; ++i) {
            if (f.is_zero(m(i, k))) continue;
            typename F::Value factor = f.mul(m(i, k), inv);
            for (int j = k; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(k, j)));
        }
    }
    return det;
}

namespace detail {

template <typename R>
typename R::Value pf_expand(const R& ring, const Matrix<typename R::Value>& m, uint32_t mask,
                            std::unordered_map<uint32_t, typename R::Value>& memo) {
    using V = typename R::Value;
    if (mask == 0) return ring.one();
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int n = m.rows();
    int i = 0;
    while (!(mask & (1u << i))) ++i;
    V acc = ring.zero();
    int pos = 0;
    for (int j = i + 1; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        const V& entry = m(i, j);
        if (!ring.is_zero(entry)) {
            V sub = pf_expand(ring, m, mask & ~((1u << i) | (1u << j)), memo);
            V term = ring.mul(entry, sub);
            acc = (pos % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
        }
        ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace detail

/// Pfaffian of an antisymmetric matrix by expansion along the lowest
/// surviving index, memoized over index subsets. Pf([[0,a],[-a,0]]) = a.
template <typename R>
typename R::Value pfaffian_expand(const R& ring, const Matrix<typename R::Value>& m) {
    const int n = m.rows();
    if (n != m.cols()) throw InvalidInput("pfaffian of a non-square matrix");
    if (n % 2 != 0) throw OddSize("pfaffian requires even size");
    if (n > 30) throw InvalidInput("matrix too large for subset expansion");
    if (n == 0) return ring.one();
    std::unordered_map<uint32_t, typename R::Value> memo;
    return detail::pf_expand(ring, m, (1u << n) - 1, memo);
}

/// Pfaffian over a field ring by congruence elimination: O(n^3), same
/// normalization as pfaffian_expand. Returns 0 on degenerate input.
template <typename F>
typename F::Value pfaffian_gauss(const F& f, Matrix<typename F::Value> m) {
    const int n = m.rows();
    if (n != m.cols()) throw InvalidInput("pfaffian of a non-square matrix");
    if (n % 2 != 0) throw OddSize("pfaffian requires even size");
    typename F::Value pf = f.one();
    for (int k = 0; k < n; k += 2) {
        int piv = -1;
        for (int i = k + 1; i < n; ++i)
            if (!f.is_zero(m(k, i))) {
                piv = i;
                break;
            }
        if (piv < 0) return f.zero();
        if (piv != k + 1) {
            // Simultaneous row and column swap multiplies the Pfaffian by -1.
            for (int c = 0; c < n; ++c) std::swap(m(k + 1, c), m(piv, c));
            for (int r = 0; r < n; ++r) std::swap(m(r, k + 1), m(r, piv));
            pf = f.neg(pf);
        }
        const typename F::Value a = m(k, k + 1);
        pf = f.mul(pf, a);
        const typename F::Value ainv = f.inv(a);
        for (int i = k + 2; i < n; ++i) {
            // col_i += c1 col_{k+1}, row_i += c1 row_{k+1} zeroes m(k, i);
            // the same with column k zeroes m(k+1, i). Congruence updates
            // keep the matrix antisymmetric and the Pfaffian unchanged.
            typename F::Value c1 = f.neg(f.mul(m(k, i), ainv));
            if (!f.is_zero(c1)) {
                for (int r = 0; r < n; ++r) m(r, i) = f.add(m(r, i), f.mul(c1, m(r, k + 1)));
                for (int c = 0; c < n; ++c) m(i, c) = f.add(m(i, c), f.mul(c1, m(k + 1, c)));
            }
            typename F::Value c2 = f.mul(m(k + 1, i), ainv);  // -m(k+1,i)/m(k+1,k)
            if (!f.is_zero(c2)) {
                for (int r = 0; r < n; ++r) m(r, i) = f.add(m(r, i), f.mul(c2, m(r, k)));
                for (int c = 0; c < n; ++c) m(i, c) = f.add(m(i, c), f.mul(c2, m(k, c)));
            }
        }
    }
    return pf;
}

/// Newton interpolation through (xs[i], ys[i]); nodes must be distinct mod p.
/// Returns monomial coefficients, degree < xs.size().
inline std::vector<uint64_t> interpolate_newton(const PrimeField& f,
                                                const std::vector<uint64_t>& xs,
                                                const std::vector<uint64_t>& ys) {
    const size_t n = xs.size();
    if (ys.size() != n || n == 0) throw InvalidInput("interpolation needs matching nonempty nodes");
    // Divided differences.
    std::vector<uint64_t> d = ys;
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            uint64_t denom = f.sub(xs[i], xs[i - level]);
            d[i] = f.mul(f.sub(d[i], d[i - 1]), f.inv(denom));
        }
    }
    // Expand the Newton form into monomial coefficients.
    std::vector<uint64_t> coeff(n, 0), basis(n, 0);
    basis[0] = 1;
    size_t basis_len = 1;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < basis_len; ++j) coeff[j] = f.add(coeff[j], f.mul(d[i], basis[j]));
        if (i + 1 < n) {
            // basis *= (x - xs[i])
            uint64_t neg = f.neg(xs[i]);
            for (size_t j = basis_len; j-- > 0;) {
                uint64_t shifted = basis[j];
                basis[j] = f.mul(basis[j], neg);
                basis[j + 1] = f.add(basis[j + 1], shifted);
            }
            ++basis_len;
        }
    }
    return coeff;
}

/// Rank over the rationals.
inline int rank_rational(Matrix<Rational> m) {
    const int rows = m.rows(), cols = m.cols();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (sgn(m(i, c)) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols; ++j) std::swap(m(rank, j), m(pivot, j));
        Rational inv = 1 / m(rank, c);
        for (int i = rank + 1; i < rows; ++i) {
            if (sgn(m(i, c)) == 0) continue;
            Rational factor = m(i, c) * inv;
            for (int j = c; j < cols; ++j) m(i, j) -= factor * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace pflab
