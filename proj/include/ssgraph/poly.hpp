#pragma once

#include "ssgraph/fp2.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace ssgraph {

// Dense univariate polynomial over GF(p^2), coefficients low-to-high.
// The zero polynomial is the empty vector; otherwise the leading coefficient
// is nonzero.
using Poly = std::vector<F2>;

namespace poly {

inline void normalize(Poly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

inline bool is_zero(const Poly& f) { return f.empty(); }

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly constant(const QuadField& F, F2 c) {
    Poly f;
    if (!c.is_zero()) f.push_back(c);
    (void)F;
    return f;
}

// Y - r
inline Poly linear_root(const QuadField& F, F2 r) {
    return {F.neg(r), F.one()};
}

inline F2 eval(const QuadField& F, const Poly& f, F2 x) {
    F2 acc = F.zero();
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        acc = F.add(F.mul(acc, x), *it);
    return acc;
}

inline Poly add(const QuadField& F, const Poly& f, const Poly& g) {
    Poly r(std::max(f.size(), g.size()), F.zero());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = F.add(r[i], g[i]);
    normalize(r);
    return r;
}

inline Poly sub(const QuadField& F, const Poly& f, const Poly& g) {
    Poly r(std::max(f.size(), g.size()), F.zero());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = F.sub(r[i], g[i]);
    normalize(r);
    return r;
}

inline Poly mul(const QuadField& F, const Poly& f, const Poly& g) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, F.zero());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
    normalize(r);
    return r;
}

inline Poly scale(const QuadField& F, const Poly& f, F2 c) {
    if (c.is_zero()) return {};
    Poly r(f.size(), F.zero());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = F.mul(f[i], c);
    return r;
}

inline Poly monic(const QuadField& F, const Poly& f) {
    if (f.empty()) return f;
    return scale(F, f, F.inv(f.back()));
}

// Quotient and remainder; g must be nonzero.
inline std::pair<Poly, Poly> divmod(const QuadField& F, Poly f, const Poly& g) {
    if (g.empty()) throw std::domain_error("polynomial division by zero");
    if (f.size() < g.size()) return {Poly{}, std::move(f)};
    F2 lead_inv = F.inv(g.back());
    Poly q(f.size() - g.size() + 1, F.zero());
    for (std::size_t k = q.size(); k-- > 0;) {
        F2 c = F.mul(f[k + g.size() - 1], lead_inv);
        if (c.is_zero()) continue;
        q[k] = c;
        for (std::size_t i = 0; i < g.size(); ++i)
            f[k + i] = F.sub(f[k + i], F.mul(c, g[i]));
    }
    normalize(q);
    normalize(f);
    return {std::move(q), std::move(f)};
}

// Monic gcd, deterministic.
inline Poly gcd(const QuadField& F, Poly f, Poly g) {
    normalize(f);
    normalize(g);
    while (!g.empty()) {
        auto [q, r] = divmod(F, std::move(f), g);
        (void)q;
        f = std::move(g);
        g = std::move(r);
    }
    return monic(F, f);
}

// base^e mod m (m nonconstant).
inline Poly powmod(const QuadField& F, Poly base, std::uint64_t e, const Poly& m) {
    Poly r = {F.one()};
    base = divmod(F, std::move(base), m).second;
    while (e) {
        if (e & 1) r = divmod(F, mul(F, r, base), m).second;
        base = divmod(F, mul(F, base, base), m).second;
        e >>= 1;
    }
    return r;
}

namespace detail {

// Distinct roots of a monic squarefree polynomial that splits completely over
// GF(p^2). Splits recursively via gcd(s, (Y+c)^((q-1)/2) - 1) with shifts c
// taken in the canonical element order, so the computation is deterministic.
inline void find_split_roots(const QuadField& F, Poly s, std::vector<F2>& out) {
    normalize(s);
    if (degree(s) <= 0) return;
    if (degree(s) == 1) {
        out.push_back(F.neg(s[0])); // monic Y + c0
        return;
    }
    const std::uint64_t half = (F.order() - 1) / 2;
    for (std::int64_t bb = 0; bb < F.p(); ++bb) {
        for (std::int64_t aa = 0; aa < F.p(); ++aa) {
            F2 c = F.make(aa, bb);
            F2 minus_c = F.neg(c);
            if (eval(F, s, minus_c).is_zero()) {
                out.push_back(minus_c);
                s = divmod(F, std::move(s), linear_root(F, minus_c)).first;
                if (degree(s) == 1) {
                    out.push_back(F.neg(s[0]));
                    return;
                }
            }
            Poly h = powmod(F, Poly{c, F.one()}, half, s);
            h = sub(F, h, Poly{F.one()});
            Poly u = gcd(F, s, h);
            if (degree(u) > 0 && degree(u) < degree(s)) {
                Poly v = divmod(F, s, u).first;
                find_split_roots(F, std::move(u), out);
                find_split_roots(F, std::move(v), out);
                return;
            }
        }
    }
    // Unreachable for a genuine split squarefree input: two distinct roots
    // are always separated by some shift.
    throw invariant_violation("root splitting", "no separating shift found");
}

} // namespace detail

struct RootMult {
    F2 root;
    int multiplicity;

    friend bool operator==(const RootMult&, const RootMult&) = default;
};

// All roots of f in GF(p^2) with multiplicities, sorted in the canonical
// element order. The part of f that splits over GF(p^2) is extracted as
// gcd(f, Y^(p^2) - Y); multiplicities by repeated exact division.
inline std::vector<RootMult> roots_with_multiplicity(const QuadField& F, Poly f) {
    normalize(f);
    if (f.empty()) throw std::domain_error("roots of the zero polynomial");
    std::vector<RootMult> out;
    if (degree(f) == 0) return out;

    Poly m = monic(F, f);
    Poly xq = powmod(F, Poly{F.zero(), F.one()}, F.order(), m);
    Poly split = gcd(F, m, sub(F, xq, Poly{F.zero(), F.one()}));

    std::vector<F2> roots;
    detail::find_split_roots(F, split, roots);

    for (F2 r : roots) {
        int mult = 0;
        Poly rest = m;
        Poly lin = linear_root(F, r);
        for (;;) {
            auto [q, rem] = divmod(F, rest, lin);
            if (!rem.empty()) break;
            ++mult;
            rest = std::move(q);
        }
        out.push_back({r, mult});
    }
    std::sort(out.begin(), out.end(),
              [](const RootMult& x, const RootMult& y) { return x.root < y.root; });
    return out;
}

} // namespace poly

} // namespace ssgraph
