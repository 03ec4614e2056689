#pragma once

#include <cstdint>

#include "pflab/error.hpp"

namespace pflab {

// 2^61 - 1, a Mersenne prime. Large enough that a single Schwartz-Zippel
// trial at degree 2N has failure probability ~ 2N / 2^61.
inline constexpr uint64_t kDefaultPrime = 2305843009213693951ULL;

/// Deterministic 64-bit PRNG; the stream depends on the seed only, never on
/// the platform (std distributions are implementation-defined, this is not).
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    uint64_t state_;
};

/// Derives an independent per-item seed from a base seed; used by batch
/// drivers so item results do not depend on scheduling order.
inline uint64_t derive_seed(uint64_t base, uint64_t index) {
    SplitMix64 rng(base ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return rng.next();
}

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/// Arithmetic in Z/p for a fixed odd prime p < 2^63. Values are plain
/// uint64_t in [0, p); the context object carries the modulus.
class PrimeField {
public:
    explicit PrimeField(uint64_t p) : p_(p) {
        if (p < 3 || p >= (1ULL << 63) || !is_prime_u64(p))
            throw InvalidInput("field modulus must be an odd prime below 2^63");
    }

    uint64_t modulus() const { return p_; }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    uint64_t mul(uint64_t a, uint64_t b) const { return detail::mulmod_u64(a, b, p_); }
    uint64_t pow(uint64_t a, uint64_t e) const { return detail::powmod_u64(a, e, p_); }
    uint64_t inv(uint64_t a) const {
        if (a == 0) throw Error("division by zero in prime field");
        return pow(a, p_ - 2);
    }
    uint64_t from_int(long long v) const {
        long long m = v % static_cast<long long>(p_);
        if (m < 0) m += static_cast<long long>(p_);
        return static_cast<uint64_t>(m);
    }

    /// Uniform draw from [0, p); rejection sampling keeps the stream
    /// deterministic across platforms.
    uint64_t sample(SplitMix64& rng) const {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % p_;
        for (;;) {
            uint64_t v = rng.next();
            if (v < limit) return v % p_;
        }
    }

private:
    uint64_t p_;
};

}  // namespace pflab
