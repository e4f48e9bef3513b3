#pragma once

#include "ssgraph/prime.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <tuple>

namespace ssgraph {

// Element of GF(p^2) = GF(p)[t]/(t^2 - d), stored as a + b*t with canonical
// representatives in [0, p). The element lies in GF(p) iff b == 0.
struct F2 {
    std::int64_t a{0};
    std::int64_t b{0};

    bool is_zero() const { return a == 0 && b == 0; }
    bool in_base_field() const { return b == 0; }

    friend bool operator==(const F2&, const F2&) = default;

    // Canonical element order: lexicographic on (b, a), so GF(p)-rational
    // elements sort first. This order fixes the class-set indexing.
    friend std::strong_ordering operator<=>(const F2& x, const F2& y) {
        return std::tie(x.b, x.a) <=> std::tie(y.b, y.a);
    }
};

// Smallest d >= 2 with d^((p-1)/2) = -1 (mod p); always exists for odd p.
inline std::int64_t least_nonresidue(PrimeModulus p) {
    const auto m = static_cast<std::uint64_t>(p.value());
    for (std::uint64_t d = 2;; ++d) {
        if (detail::powmod_u64(d, (m - 1) / 2, m) == m - 1)
            return static_cast<std::int64_t>(d);
    }
}

// Arithmetic context for GF(p^2) with the deterministic representation
// t^2 = d, d the least quadratic non-residue mod p. Elements are plain F2
// values; all operations are pure.
class QuadField {
public:
    explicit QuadField(PrimeModulus p) : p_(p.value()), d_(least_nonresidue(p)) {}

    std::int64_t p() const { return p_; }
    std::int64_t nonresidue() const { return d_; }
    std::uint64_t order() const {
        return static_cast<std::uint64_t>(p_) * static_cast<std::uint64_t>(p_);
    }

    F2 make(std::int64_t a, std::int64_t b = 0) const { return {mod(a), mod(b)}; }
    F2 zero() const { return {0, 0}; }
    F2 one() const { return {1, 0}; }
    F2 gen() const { return {0, 1}; } // t itself

    F2 add(F2 x, F2 y) const { return {addm(x.a, y.a), addm(x.b, y.b)}; }
    F2 sub(F2 x, F2 y) const { return {subm(x.a, y.a), subm(x.b, y.b)}; }
    F2 neg(F2 x) const { return {subm(0, x.a), subm(0, x.b)}; }

    // (a + bt)(c + et) = ac + bed + (ae + bc) t
    F2 mul(F2 x, F2 y) const {
        return {addm(mulm(x.a, y.a), mulm(d_, mulm(x.b, y.b))),
                addm(mulm(x.a, y.b), mulm(x.b, y.a))};
    }

    // Frobenius x -> x^p; t^p = -t since d^((p-1)/2) = -1.
    F2 conj(F2 x) const { return {x.a, subm(0, x.b)}; }

    // Norm a^2 - d b^2 vanishes only at 0 because d is a non-residue.
    F2 inv(F2 x) const {
        if (x.is_zero()) throw std::domain_error("inverse of zero in GF(p^2)");
        std::int64_t n = subm(mulm(x.a, x.a), mulm(d_, mulm(x.b, x.b)));
        std::int64_t ninv = inv_mod_p(n);
        return {mulm(x.a, ninv), mulm(subm(0, x.b), ninv)};
    }

    F2 pow(F2 x, std::uint64_t e) const {
        F2 r = one();
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    std::string to_string(F2 x) const {
        if (x.b == 0) return std::to_string(x.a);
        return std::to_string(x.a) + " + " + std::to_string(x.b) + "*t";
    }

private:
    std::int64_t mod(std::int64_t v) const {
        std::int64_t r = v % p_;
        return r < 0 ? r + p_ : r;
    }
    std::int64_t addm(std::int64_t x, std::int64_t y) const {
        std::int64_t r = x + y;
        return r >= p_ ? r - p_ : r;
    }
    std::int64_t subm(std::int64_t x, std::int64_t y) const {
        std::int64_t r = x - y;
        return r < 0 ? r + p_ : r;
    }
    std::int64_t mulm(std::int64_t x, std::int64_t y) const {
        return static_cast<std::int64_t>(
            static_cast<__int128>(x) * y % p_);
    }
    std::int64_t inv_mod_p(std::int64_t v) const {
        // extended Euclid; v != 0 mod p
        std::int64_t r0 = p_, r1 = mod(v), s0 = 0, s1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            r0 -= q * r1; std::swap(r0, r1);
            s0 -= q * s1; std::swap(s0, s1);
        }
        return mod(s0);
    }

    std::int64_t p_;
    std::int64_t d_;
};

} // namespace ssgraph
