#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "oracle.hpp"
#include "pflab/poly.hpp"

using namespace pflab;

namespace {

const VarId X = VarId::g(1, 1);
const VarId Y = VarId::g(1, 2);

Poly px() { return Poly::variable(X); }
Poly py() { return Poly::variable(Y); }

}  // namespace

TEST_CASE("ring arithmetic basics") {
    // (x+y)(x-y) = x^2 - y^2
    Poly lhs = (px() + py()) * (px() - py());
    Poly rhs = Poly::variable(X, 2) - Poly::variable(Y, 2);
    CHECK(lhs == rhs);

    Poly p = px() * py() + Poly::constant(Rational(7));
    CHECK((p + (-p)).is_zero());
    CHECK(p.scale(0).is_zero());
    CHECK(p.scale(Rational(1, 2)) + p.scale(Rational(1, 2)) == p);
}

TEST_CASE("canonical form stores no zero terms") {
    Poly p = px() - px();
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    Poly q = px() * py() - py() * px();
    CHECK(q.is_zero());
}

TEST_CASE("monomial order is graded lex with s < t < l < G") {
    Monomial s = Monomial::variable(VarId::s());
    Monomial t = Monomial::variable(VarId::t());
    Monomial l2 = Monomial::variable(VarId::lambda(), 2);
    CHECK(Monomial::order(s, t) == std::strong_ordering::less);
    CHECK(Monomial::order(t, Monomial::variable(X)) == std::strong_ordering::less);
    // Degree dominates.
    CHECK(Monomial::order(l2, Monomial::variable(X)) == std::strong_ordering::greater);
    // Multiplicative: a < b implies ac < bc.
    Monomial c = Monomial::variable(Y, 3);
    CHECK(Monomial::order(s * c, t * c) == std::strong_ordering::less);
}

TEST_CASE("coeff_of reads off coefficients") {
    // s^2 t + s t -> coefficient of s^2 is t
    Poly p = Poly::variable(VarId::s(), 2) * Poly::variable(VarId::t()) +
             Poly::variable(VarId::s()) * Poly::variable(VarId::t());
    CHECK(p.coeff_of(VarId::s(), 2) == Poly::variable(VarId::t()));
    // whole polynomial is t-free
    Poly l3 = Poly::variable(VarId::lambda(), 3);
    CHECK(l3.coeff_of(VarId::t(), 0) == l3);
}

TEST_CASE("coeff_of partitions the polynomial") {
    SplitMix64 rng(11);
    std::vector<VarId> vars{VarId::s(), VarId::t(), X};
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = oracle::random_poly(rng, vars, 6, 3, 9);
        Poly sum;
        for (uint32_t e = 0; e <= 4; ++e)
            sum += Poly::variable(VarId::s(), e) * p.coeff_of(VarId::s(), e);
        // e = 0 term: coeff_of at exponent 0 contributes once with s^0 = 1;
        // Poly::variable(v, 0) is the monomial 1.
        CHECK(sum == p);
    }
}

TEST_CASE("valuation") {
    Poly p = Poly::variable(VarId::t(), 2) * px() + Poly::variable(VarId::t(), 3) * py();
    CHECK(p.valuation(VarId::t()) == 2u);
    CHECK(Poly().valuation(VarId::t()) == std::nullopt);
    CHECK(p.valuation(VarId::lambda()) == 0u);
}

TEST_CASE("evaluation over Q and over a prime field") {
    Poly p = Poly::variable(X, 2) + Poly::constant(1);
    std::map<VarId, Rational> a{{X, Rational(2)}};
    CHECK(p.eval_q(a) == Rational(5));
    CHECK(Poly().eval_q({}) == Rational(0));
    CHECK_THROWS_AS(p.eval_q({}), MissingAssignment);

    PrimeField f(kDefaultPrime);
    SplitMix64 rng(23);
    std::vector<VarId> vars{X, Y, VarId::t()};
    for (int trial = 0; trial < 100; ++trial) {
        Poly u = oracle::random_poly(rng, vars, 5, 3, 20);
        Poly v = oracle::random_poly(rng, vars, 5, 3, 20);
        std::map<VarId, Rational> aq;
        std::map<VarId, uint64_t> af;
        for (const auto& var : vars) {
            long val = static_cast<long>(rng.next() % 1000) - 500;
            aq[var] = Rational(val);
            af[var] = f.from_int(val);
        }
        CHECK((u * v).eval_q(aq) == u.eval_q(aq) * v.eval_q(aq));
        CHECK((u + v).eval_q(aq) == u.eval_q(aq) + v.eval_q(aq));
        CHECK((u * v).eval_fp(af, f) == f.mul(u.eval_fp(af, f), v.eval_fp(af, f)));
        CHECK((u + v).eval_fp(af, f) == f.add(u.eval_fp(af, f), v.eval_fp(af, f)));
    }
}

TEST_CASE("poly_sqrt on the worked examples") {
    // x^2 + 2xy + y^2 -> x + y
    Poly sq = Poly::variable(X, 2) + Poly::constant(2) * px() * py() + Poly::variable(Y, 2);
    auto r = poly_sqrt(sq);
    REQUIRE(r.has_value());
    CHECK(*r == px() + py());

    CHECK(!poly_sqrt(Poly::variable(X, 2) + Poly::variable(Y, 2)).has_value());

    // 4 x^2 y^4 -> 2 x y^2
    Poly m = Poly::constant(4) * Poly::variable(X, 2) * Poly::variable(Y, 4);
    auto rm = poly_sqrt(m);
    REQUIRE(rm.has_value());
    CHECK(*rm == Poly::constant(2) * px() * Poly::variable(Y, 2));

    CHECK(poly_sqrt(Poly())->is_zero());
    CHECK(!poly_sqrt(-Poly::constant(1)).has_value());
    CHECK(!poly_sqrt(Poly::constant(2)).has_value());
    CHECK(*poly_sqrt(Poly::constant(Rational(9, 4))) == Poly::constant(Rational(3, 2)));
}

TEST_CASE("poly_sqrt round trip on random polynomials") {
    SplitMix64 rng(2024);
    std::vector<VarId> vars{VarId::s(), VarId::t(), VarId::lambda(), X, Y};
    int nontrivial = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        Poly q = oracle::random_poly(rng, vars, 5, 3, 8);
        auto r = poly_sqrt(q * q);
        REQUIRE(r.has_value());
        CHECK(*r == normalize_sign(q));
        if (q.term_count() > 1) ++nontrivial;
    }
    CHECK(nontrivial > 500);
}

TEST_CASE("text format") {
    CHECK(Poly().to_string() == "0");
    Poly a = Poly::variable(VarId::g(2, 1), 2);
    CHECK(a.to_string(2) == "A[2,1]^2");
    // -2 s t^3 l^2 B[1,3] over so(8): B[1,3] sits at G(1, 4+3).
    Poly b = Poly::constant(-2) * Poly::variable(VarId::s()) * Poly::variable(VarId::t(), 3) *
             Poly::variable(VarId::lambda(), 2) * Poly::variable(VarId::g(1, 7));
    CHECK(b.to_string(4) == "-2*s*t^3*l^2*B[1,3]");
    // Y = G(1,2) decodes as B[1,1] over so(2) and outranks X = G(1,1).
    Poly c = px() - py();
    CHECK(c.to_string(1) == "-B[1,1] + A[1,1]");
    CHECK(Poly::constant(Rational(7, 3)).to_string() == "7/3");
}

TEST_CASE("prime field") {
    CHECK(is_prime_u64(kDefaultPrime));
    CHECK(is_prime_u64(2));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(kDefaultPrime - 1));
    CHECK_THROWS_AS(PrimeField(1000000), InvalidInput);
    PrimeField f(kDefaultPrime);
    CHECK(f.mul(f.inv(12345), 12345) == 1);
    CHECK(f.from_int(-1) == kDefaultPrime - 1);
    CHECK(f.pow(3, 0) == 1);
    // sample() is uniform on [0, p) and deterministic.
    SplitMix64 a(3), b(3);
    for (int i = 0; i < 100; ++i) {
        uint64_t v = f.sample(a);
        CHECK(v < f.modulus());
        CHECK(v == f.sample(b));
    }
}

TEST_CASE("rename merges nothing on injective maps") {
    Poly p = px() * py() + Poly::constant(3) * px();
    std::map<VarId, VarId> m{{X, VarId::g(2, 2)}, {Y, VarId::g(3, 1)}};
    Poly q = p.rename(m);
    CHECK(q.term_count() == p.term_count());
    CHECK(q.rename({{VarId::g(2, 2), X}, {VarId::g(3, 1), Y}}) == p);
}
