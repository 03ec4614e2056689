#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pflab/error.hpp"
#include "pflab/fp.hpp"
#include "pflab/rational.hpp"

namespace pflab {

// Variable universe: the pencil scalars s, t, l (lambda) and the independent
// coordinates of a generic element of so(2N), addressed by their canonical
// matrix position. With N the half size: A[i,j] lives at (i, j) for
// i, j <= N; B[i,j] (i < j) at (i, N+j); C[i,j] (i < j) at (N+i, j).
// Indices are 1-based throughout.
struct VarId {
    enum Tag : uint8_t { S = 0, T = 1, Lambda = 2, G = 3 };

    Tag tag = S;
    uint16_t row = 0;
    uint16_t col = 0;

    // Yields the order s < t < l < G-vars (row-major).
    friend auto operator<=>(const VarId&, const VarId&) = default;

    static VarId s() { return {S, 0, 0}; }
    static VarId t() { return {T, 0, 0}; }
    static VarId lambda() { return {Lambda, 0, 0}; }
    static VarId g(int row, int col) {
        return {G, static_cast<uint16_t>(row), static_cast<uint16_t>(col)};
    }
};

/// Display name of a variable. `half_n` decodes G positions into the A/B/C
/// chart of so(2*half_n); pass 0 to print raw positions.
std::string var_name(const VarId& v, int half_n = 0);

/// A power product: sorted (VarId, exponent) pairs, exponents > 0.
class Monomial {
public:
    Monomial() = default;
    static Monomial one() { return {}; }
    static Monomial variable(VarId v, uint32_t e = 1);

    const std::vector<std::pair<VarId, uint32_t>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int degree() const;
    uint32_t exponent(VarId v) const;

    Monomial operator*(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // requires divisibility

    bool all_exponents_even() const;
    Monomial half() const;  // requires all exponents even

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // Graded lexicographic order: total degree first, ties broken on the
    // exponent of the largest variable where the two monomials differ.
    static std::strong_ordering order(const Monomial& a, const Monomial& b);

private:
    std::vector<std::pair<VarId, uint32_t>> factors_;
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::order(a, b) == std::strong_ordering::less;
    }
};

/// Exact sparse multivariate polynomial over the rationals. Canonical form:
/// no zero coefficients stored, terms keyed by monomial under graded lex.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    Poly() = default;  // zero
    static Poly constant(const Rational& c);
    static Poly variable(VarId v, uint32_t e = 1);
    static Poly term(const Rational& c, const Monomial& m);
    /// Linear-time construction from strictly increasing nonzero terms.
    static Poly from_sorted_terms(std::vector<std::pair<Monomial, Rational>>&& entries);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    int total_degree() const;  // -1 for the zero polynomial

    /// Leading term under the monomial order; throws on zero.
    std::pair<Monomial, Rational> leading_term() const;
    Rational coefficient(const Monomial& m) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly scale(const Rational& c) const;

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Coefficient of v^e: the polynomial q_e (free of v) in
    /// p = sum_e q_e v^e. Zero polynomial when absent.
    Poly coeff_of(VarId v, uint32_t e) const;

    /// Minimal exponent of v across terms; nullopt (= +infinity) on zero.
    std::optional<uint32_t> valuation(VarId v) const;

    std::vector<VarId> variables() const;

    /// Exact evaluation; every variable of p must be assigned.
    Rational eval_q(const std::map<VarId, Rational>& assign) const;
    uint64_t eval_fp(const std::map<VarId, uint64_t>& assign, const PrimeField& f) const;

    /// Variable renaming (used for sub-algebra embeddings).
    Poly rename(const std::map<VarId, VarId>& m) const;

    std::string to_string(int half_n = 0) const;

private:
    friend Poly add_scaled(const Poly&, const Poly&, const Rational&);
    TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p.scale(c); }

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        uint64_t h = 1469598103934665603ULL;
        for (const auto& [v, e] : m.factors()) {
            uint64_t key = (static_cast<uint64_t>(v.tag) << 40) |
                           (static_cast<uint64_t>(v.row) << 24) |
                           (static_cast<uint64_t>(v.col) << 8) | e;
            h = (h ^ key) * 1099511628211ULL;
            h ^= h >> 29;
        }
        return static_cast<size_t>(h);
    }
};

/// Hash-based term accumulator for long sums of products; one canonical sort
/// when the result is taken, so the outcome is independent of accumulation
/// order.
class PolyAccumulator {
public:
    void add_product(const Poly& a, const Poly& b, bool negate = false);
    void add(const Poly& a, bool negate = false);
    Poly take();

private:
    std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

/// Exact polynomial square root: the unique q with q*q == p and positive
/// leading coefficient, or nullopt when p is not a square. Term-by-term
/// descent on LT(r) / (2 LT(q)); any non-divisible step means not a square.
std::optional<Poly> poly_sqrt(const Poly& p);

/// p or -p, whichever has a positive leading coefficient (zero unchanged).
Poly normalize_sign(const Poly& p);

}  // namespace pflab
