#include "pflab/somatrix.hpp"

#include <algorithm>

namespace pflab {

namespace {

template <typename T, typename IsZero>
bool mj_antisymmetric(const Matrix<T>& m, int n, IsZero is_zero) {
    // (M*J)(i,j) = M(i, (j+n) mod 2n); antisymmetry of M*J is the so-form.
    const int size = 2 * n;
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j <= i; ++j) {
            const T& a = m(i, (j + n) % size);
            const T& b = m(j, (i + n) % size);
            if (i == j) {
                if (!is_zero(a)) return false;
            } else if (!is_zero(a + b)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

bool so_form_ok(const SoMatrix& m) {
    if (m.entries.rows() != m.size() || m.entries.cols() != m.size()) return false;
    return mj_antisymmetric(m.entries, m.half, [](const Poly& p) { return p.is_zero(); });
}

bool so_form_ok_int(const Matrix<int>& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
    return mj_antisymmetric(m, m.rows() / 2, [](int v) { return v == 0; });
}

SoMatrix basis_xminus(int i, int j, int n) {
    if (i < 1 || j < 1 || i > n || j > n) throw IndexError("X^- indices outside 1..n");
    SoMatrix m{n, Matrix<Poly>(2 * n, 2 * n)};
    m.entries(i - 1, j - 1) += Poly::constant(1);
    m.entries(j + n - 1, i + n - 1) -= Poly::constant(1);
    return m;
}

SoMatrix basis_xplus(int i, int j, int n) {
    if (i < 1 || j < 1 || i >= j || j > n) throw IndexError("X^+ requires 1 <= i < j <= n");
    SoMatrix m{n, Matrix<Poly>(2 * n, 2 * n)};
    m.entries(i - 1, j + n - 1) += Poly::constant(1);
    m.entries(j - 1, i + n - 1) -= Poly::constant(1);
    return m;
}

SoMatrix generic_g(int n) {
    if (n < 1) throw InvalidInput("generic element needs n >= 1");
    SoMatrix m{n, Matrix<Poly>(2 * n, 2 * n)};
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Poly a = Poly::variable(VarId::g(i, j));
            m.entries(i - 1, j - 1) = a;
            m.entries(n + j - 1, n + i - 1) = -a;
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            Poly b = Poly::variable(VarId::g(i, n + j));
            m.entries(i - 1, n + j - 1) = b;
            m.entries(j - 1, n + i - 1) = -b;
            Poly c = Poly::variable(VarId::g(n + i, j));
            m.entries(n + i - 1, j - 1) = c;
            m.entries(n + j - 1, i - 1) = -c;
        }
    }
    return m;
}

std::vector<int> BlockLayout::minor_indices(const Entry& e, int half) {
    std::vector<int> idx;
    if (e.block.kind == LegoBlock::Kind::TypeI) {
        const int r = e.block.top;
        if (e.block.sign > 0)
            for (int k = 0; k < r; ++k) idx.push_back(e.offset + k);
        else
            for (int k = 0; k < r; ++k) idx.push_back(half + e.offset + k);
    } else {
        const int w = e.block.half_width();
        for (int k = 0; k < w; ++k) idx.push_back(e.offset + k);
        for (int k = 0; k < w; ++k) idx.push_back(half + e.offset + k);
    }
    return idx;
}

Nilpotent realize_nilpotent(const Realization& r) {
    const int n = static_cast<int>(r.realized.half());
    Nilpotent nil{r.realized, BlockLayout{n, {}}, Matrix<int>(2 * n, 2 * n, 0)};

    auto put = [&](int row, int col, int v) { nil.x(row - 1, col - 1) = v; };

    int offset = 1;
    for (size_t i = 0; i < r.blocks.size(); ++i) {
        const LegoBlock& blk = r.blocks[i];
        if (blk.kind == LegoBlock::Kind::TypeI) {
            // A +,- pair of the same r shares one (r,r) so-block carrying
            // sum_{k<r} X^-_{k,k+1}: +1 on the top superdiagonal, -1 on the
            // bottom subdiagonal.
            if (blk.sign <= 0 || i + 1 >= r.blocks.size() ||
                r.blocks[i + 1] != LegoBlock{LegoBlock::Kind::TypeI, blk.top, -1})
                throw Error("Type I blocks must come in adjacent +,- pairs");
            const int w = blk.top;
            for (int k = 1; k < w; ++k) {
                put(offset + k - 1, offset + k, 1);
                put(n + offset + k, n + offset + k - 1, -1);
            }
            nil.layout.entries.push_back({blk, offset, w});
            nil.layout.entries.push_back({r.blocks[i + 1], offset, w});
            offset += w;
            ++i;
        } else {
            // (2a+1, 1) block of half-width a+1:
            // sum_{k<=a} X^-_{k,k+1} + X^+_{a,a+1}; zero block when a = 0.
            const int a = (blk.top - 1) / 2;
            const int w = a + 1;
            for (int k = 1; k <= a; ++k) {
                put(offset + k - 1, offset + k, 1);
                put(n + offset + k, n + offset + k - 1, -1);
            }
            if (a >= 1) {
                put(offset + a - 1, n + offset + a, 1);
                put(offset + a, n + offset + a - 1, -1);
            }
            nil.layout.entries.push_back({blk, offset, w});
            offset += w;
        }
    }
    if (offset != n + 1) throw Error("block half-widths do not tile the top half");
    return nil;
}

SoMatrix build_nilpotent(const Partition& p) {
    Realization r = realize(p);
    if (r.augmented())
        throw UnsupportedPair(
            "partition has an odd pair [2a+1,2b+1] with b > 0; realize it via its Lego set");
    Nilpotent nil = realize_nilpotent(r);
    return SoMatrix{static_cast<int>(p.half()), int_to_poly(nil.x)};
}

Matrix<Poly> int_to_poly(const Matrix<int>& m) {
    Matrix<Poly> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out(i, j) = Poly::constant(m(i, j));
    return out;
}

std::pair<Matrix<Poly>, int> antisymmetrize(const SoMatrix& m) {
    if (!so_form_ok(m)) throw NotSoForm("matrix is not in so-form");
    const int n = m.half, size = 2 * n;
    Matrix<Poly> out(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) out(i, j) = m.entries(i, (j + n) % size);
    return {std::move(out), n % 2 == 0 ? 1 : -1};
}

Poly pfaffian(const Matrix<Poly>& m) {
    const int size = m.rows();
    if (size != m.cols()) throw InvalidInput("pfaffian of a non-square matrix");
    if (size % 2 != 0) throw OddSize("pfaffian requires even size");
    for (int i = 0; i < size; ++i)
        for (int j = 0; j <= i; ++j)
            if (!(m(i, j) + m(j, i)).is_zero())
                throw InvalidInput("pfaffian of a non-antisymmetric matrix");
    return pfaffian_expand(PolyRing{}, m);
}

Poly determinant(const Matrix<Poly>& m) {
    // The subset memo holds every minor of the trailing rows at once; on a
    // 10x10 generic symbolic matrix that is gigabytes, while the
    // complementary-minor form only ever holds half-size minors.
    if (m.rows() >= 10) return determinant_split(PolyRing{}, m);
    return determinant_laplace(PolyRing{}, m);
}

Matrix<uint64_t> sample_g_fp(int n, const PrimeField& f, SplitMix64& rng) {
    Matrix<uint64_t> m(2 * n, 2 * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            uint64_t a = f.sample(rng);
            m(i, j) = a;
            m(n + j, n + i) = f.neg(a);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            uint64_t b = f.sample(rng);
            m(i, n + j) = b;
            m(j, n + i) = f.neg(b);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            uint64_t c = f.sample(rng);
            m(n + i, j) = c;
            m(n + j, i) = f.neg(c);
        }
    }
    return m;
}

std::vector<int> jordan_type(const Matrix<int>& x) {
    const int n = x.rows();
    if (n != x.cols()) throw InvalidInput("jordan type of a non-square matrix");
    Matrix<Rational> power(n, n, 0), xq(n, n, 0);
    for (int i = 0; i < n; ++i) {
        power(i, i) = 1;
        for (int j = 0; j < n; ++j) xq(i, j) = x(i, j);
    }
    std::vector<int> ranks{n};  // rank of X^0
    while (ranks.back() > 0) {
        Matrix<Rational> next(n, n, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (sgn(power(i, k)) == 0) continue;
                for (int j = 0; j < n; ++j) next(i, j) += power(i, k) * xq(k, j);
            }
        power = next;
        ranks.push_back(rank_rational(power));
        if (ranks.size() > static_cast<size_t>(n) + 1)
            throw InvalidInput("matrix is not nilpotent");
    }
    // Blocks of size >= e: rank(X^{e-1}) - rank(X^e).
    std::vector<int> type;
    for (size_t e = 1; e < ranks.size(); ++e) {
        int at_least_e = ranks[e - 1] - ranks[e];
        int at_least_next = e < ranks.size() - 1 ? ranks[e] - ranks[e + 1] : 0;
        int exactly_e = at_least_e - at_least_next;
        for (int c = 0; c < exactly_e; ++c) type.push_back(static_cast<int>(e));
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

}  // namespace pflab
