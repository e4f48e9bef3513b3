#pragma once

#include "ssgraph/errors.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ssgraph {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

} // namespace detail

// Deterministic Miller-Rabin, valid for all 64-bit inputs with this base set.
inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = static_cast<std::uint64_t>(n - 1);
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = detail::powmod_u64(a, d, static_cast<std::uint64_t>(n));
        if (x == 1 || x == static_cast<std::uint64_t>(n - 1)) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod_u64(x, x, static_cast<std::uint64_t>(n));
            if (x == static_cast<std::uint64_t>(n - 1)) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// The characteristic p. Rejects p < 5 so that j = 0 and j = 1728 stay distinct
// and the weight rule w in {1,2,3} is total.
class PrimeModulus {
public:
    explicit PrimeModulus(std::int64_t p) : p_(p) {
        if (p < 5 || !is_prime(p))
            throw std::domain_error("p must be a prime >= 5");
        if (p >= (std::int64_t{1} << 31))
            throw std::domain_error("p out of supported range (p < 2^31)");
    }

    std::int64_t value() const { return p_; }

    friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }

private:
    std::int64_t p_;
};

inline std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> ps;
    for (std::int64_t n = lo < 2 ? 2 : lo; n <= hi; ++n)
        if (is_prime(n)) ps.push_back(n);
    return ps;
}

} // namespace ssgraph
