#pragma once

#include "ssgraph/fp2.hpp"
#include "ssgraph/integers.hpp"
#include "ssgraph/modpoly.hpp"
#include "ssgraph/poly.hpp"
#include "ssgraph/prime.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <vector>

namespace ssgraph {

// One isomorphism class of supersingular curves, identified by its
// j-invariant. The weight is |Aut|/2: 3 at j = 0, 2 at j = 1728, else 1.
struct SupersingularClass {
    F2 j;
    int weight;

    friend bool operator==(const SupersingularClass&, const SupersingularClass&) = default;
};

inline int weight_of(PrimeModulus p, F2 j) {
    if (j.is_zero()) return 3;
    if (j.b == 0 && j.a == 1728 % p.value()) return 2;
    return 1;
}

// Expected |C| from the genus count, by p mod 12.
inline std::int64_t expected_class_count(PrimeModulus p) {
    switch (p.value() % 12) {
        case 1: return (p.value() - 1) / 12;
        case 5: return (p.value() + 7) / 12;
        case 7: return (p.value() + 5) / 12;
        default: return (p.value() + 13) / 12; // p = 11 mod 12
    }
}

namespace detail {

// #E(F_p) by an x-scan with the quadratic character; exact for p >= 5.
inline std::int64_t count_points(std::int64_t p, std::int64_t a, std::int64_t b) {
    std::vector<std::uint8_t> qr(static_cast<std::size_t>(p), 0);
    for (std::int64_t x = 1; x < p; ++x)
        qr[static_cast<std::size_t>(static_cast<__int128>(x) * x % p)] = 1;
    std::int64_t n = p + 1; // infinity plus one affine point per x on average
    for (std::int64_t x = 0; x < p; ++x) {
        auto v = static_cast<std::int64_t>(
            ((static_cast<__int128>(x) * x % p * x + static_cast<__int128>(a) * x + b) % p + p) % p);
        if (v == 0) continue;      // one point (x, 0), already counted in p
        n += qr[static_cast<std::size_t>(v)] ? 1 : -1;
    }
    return n;
}

// A Weierstrass model over F_p with the given rational j-invariant.
inline std::pair<std::int64_t, std::int64_t> model_for_j(PrimeModulus pm, std::int64_t j) {
    const std::int64_t p = pm.value();
    j = ((j % p) + p) % p;
    if (j == 0) return {0, 1};              // y^2 = x^3 + 1
    if (j == 1728 % p) return {1, 0};       // y^2 = x^3 + x
    // k = j/(1728 - j): y^2 = x^3 + 3kx + 2k has invariant j
    std::int64_t den = ((1728 - j) % p + p) % p;
    std::int64_t s0 = 0, s1 = 1, r0 = p, r1 = den;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        r0 -= q * r1; std::swap(r0, r1);
        s0 -= q * s1; std::swap(s0, s1);
    }
    std::int64_t inv = ((s0 % p) + p) % p;
    auto k = static_cast<std::int64_t>(static_cast<__int128>(j) * inv % p);
    return {static_cast<std::int64_t>(static_cast<__int128>(3) * k % p),
            static_cast<std::int64_t>(static_cast<__int128>(2) * k % p)};
}

} // namespace detail

// Supersingularity test for a rational j-invariant: the trace vanishes
// exactly when #E(F_p) = p + 1.
inline bool is_supersingular(PrimeModulus p, std::int64_t j) {
    auto [a, b] = detail::model_for_j(p, j);
    return detail::count_points(p.value(), a, b) == p.value() + 1;
}

// A supersingular j-invariant in GF(p); CM seeds cover p != 1 mod 12 and the
// remaining case is a scan (a rational supersingular j always exists).
inline std::int64_t find_seed(PrimeModulus p) {
    if (p.value() % 4 == 3) return 1728 % p.value();
    if (p.value() % 3 == 2) return 0;
    for (std::int64_t j = 0;; ++j)
        if (is_supersingular(p, j)) return j;
}

// The ordered set C of supersingular j-invariants over GF(p^2) with weights.
// The class list is canonically sorted; construction validates the mass
// formula, the cardinality count, Frobenius stability, and the weight rule.
class SupersingularClassSet {
public:
    SupersingularClassSet(PrimeModulus p, std::vector<SupersingularClass> classes)
        : p_(p), field_(p), classes_(std::move(classes)) {
        validate();
    }

    PrimeModulus prime() const { return p_; }
    const QuadField& field() const { return field_; }
    const std::vector<SupersingularClass>& classes() const { return classes_; }
    std::size_t size() const { return classes_.size(); }

    const SupersingularClass& operator[](std::size_t i) const { return classes_[i]; }

    std::optional<std::size_t> index_of(F2 j) const {
        auto it = std::lower_bound(classes_.begin(), classes_.end(), j,
                                   [](const SupersingularClass& c, F2 v) { return c.j < v; });
        if (it == classes_.end() || !(it->j == j)) return std::nullopt;
        return static_cast<std::size_t>(it - classes_.begin());
    }

    std::vector<Int> weights() const {
        std::vector<Int> w(classes_.size());
        for (std::size_t i = 0; i < classes_.size(); ++i) w[i] = classes_[i].weight;
        return w;
    }

private:
    void validate() const {
        const std::int64_t p = p_.value();
        if (static_cast<std::int64_t>(classes_.size()) != expected_class_count(p_))
            throw invariant_violation("cardinality",
                                      "class count does not match the genus count at p = " +
                                          std::to_string(p));
        if (!std::is_sorted(classes_.begin(), classes_.end(),
                            [](const SupersingularClass& x, const SupersingularClass& y) {
                                return x.j < y.j;
                            }))
            throw invariant_violation("canonical order", "class list is not sorted");
        Rat mass = 0;
        std::set<F2> seen;
        for (const auto& c : classes_) {
            if (c.j.a < 0 || c.j.a >= p || c.j.b < 0 || c.j.b >= p)
                throw invariant_violation("representatives", "j-coordinate out of range");
            if (!seen.insert(c.j).second)
                throw invariant_violation("distinctness", "duplicate j-invariant");
            if (c.weight != weight_of(p_, c.j))
                throw invariant_violation("weight rule",
                                          "weight does not follow the j = 0 / 1728 rule");
            mass += Rat(1, c.weight);
        }
        if (mass != Rat(p - 1, 12))
            throw invariant_violation("mass formula",
                                      "sum 1/w_C != (p-1)/12 at p = " + std::to_string(p));
        for (const auto& c : classes_)
            if (!seen.count(field_.conj(c.j)))
                throw invariant_violation("frobenius stability",
                                          "conjugate class missing at p = " + std::to_string(p));
    }

    PrimeModulus p_;
    QuadField field_;
    std::vector<SupersingularClass> classes_;
};

// BFS over the 2-isogeny graph from a given rational seed. Connectivity of
// the graph makes the walk complete; the genus count bounds it.
inline SupersingularClassSet enumerate_from_seed(PrimeModulus p, const ModularPolynomial& phi2,
                                                 std::int64_t seed) {
    QuadField F{p};
    ReducedModularPolynomial red = reduce_mod_p(phi2, p);
    const std::int64_t bound = expected_class_count(p);

    std::set<F2> visited;
    std::deque<F2> queue;
    F2 start = F.make(seed);
    visited.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        F2 j = queue.front();
        queue.pop_front();
        Poly f = red.specialize(F, j);
        for (const auto& rm : poly::roots_with_multiplicity(F, f)) {
            if (visited.count(rm.root)) continue;
            visited.insert(rm.root);
            if (static_cast<std::int64_t>(visited.size()) > bound)
                throw invariant_violation(
                    "cardinality", "isogeny walk left the supersingular locus (bad Phi_2 data?)");
            queue.push_back(rm.root);
        }
    }

    std::vector<SupersingularClass> classes;
    classes.reserve(visited.size());
    for (F2 j : visited) classes.push_back({j, weight_of(p, j)});
    return SupersingularClassSet(p, std::move(classes)); // validates the rest
}

inline SupersingularClassSet enumerate_classes(PrimeModulus p, const ModularPolynomial& phi2) {
    return enumerate_from_seed(p, phi2, find_seed(p));
}

// Membership test for arbitrary j in GF(p^2). Rational invariants use point
// counting; the rest are certified by reachability in the 2-isogeny graph.
inline bool is_supersingular(PrimeModulus p, F2 j, const ModularPolynomial& phi2) {
    if (j.in_base_field()) return is_supersingular(p, j.a);
    return enumerate_classes(p, phi2).index_of(j).has_value();
}

} // namespace ssgraph
