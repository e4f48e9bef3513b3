#pragma once

#include "ssgraph/errors.hpp"
#include "ssgraph/integers.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ssgraph {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

// Invariant factors d_1 | d_2 | ... | d_k, zeros only at the tail.
struct SmithForm {
    std::vector<Int> invariant_factors;

    Int product_of_nonzero() const {
        Int p = 1;
        for (const Int& d : invariant_factors)
            if (d != 0) p *= d;
        return p;
    }

    friend bool operator==(const SmithForm&, const SmithForm&) = default;
};

namespace detail {

// Minimal nonzero |entry| in the trailing submatrix; ties broken by lowest
// row, then lowest column index, which fixes the elimination order.
inline std::optional<std::pair<std::size_t, std::size_t>>
min_pivot(const IntMatrix& a, std::size_t from) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs = 0;
    for (std::size_t i = from; i < a.rows(); ++i)
        for (std::size_t j = from; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int v = abs_int(a(i, j));
            if (!best || v < best_abs) {
                best = {{i, j}};
                best_abs = v;
            }
        }
    return best;
}

inline void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

inline void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

} // namespace detail

// Smith normal form by exact integer elimination with minimal-|entry| pivots.
// Arbitrary precision throughout; intermediate growth is accepted.
inline SmithForm smith_invariants(IntMatrix a) {
    const std::size_t k = std::min(a.rows(), a.cols());
    SmithForm out;
    out.invariant_factors.assign(k, Int(0));

    for (std::size_t t = 0; t < k; ++t) {
        auto piv = detail::min_pivot(a, t);
        if (!piv) break; // remaining block is zero
        for (;;) {
            detail::swap_rows(a, t, piv->first);
            detail::swap_cols(a, t, piv->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                if (q != 0)
                    for (std::size_t c = t; c < a.cols(); ++c) a(i, c) -= q * a(t, c);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                if (q != 0)
                    for (std::size_t r = t; r < a.rows(); ++r) a(r, j) -= q * a(r, t);
                if (a(t, j) != 0) clean = false;
            }
            if (clean) {
                // pivot must divide the rest of the submatrix
                bool divides = true;
                for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
                    for (std::size_t j = t + 1; j < a.cols() && divides; ++j)
                        if (a(i, j) % a(t, t) != 0) {
                            for (std::size_t c = t; c < a.cols(); ++c)
                                a(t, c) += a(i, c);
                            divides = false;
                        }
                if (divides) break;
            }
            piv = detail::min_pivot(a, t);
        }
        out.invariant_factors[t] = abs_int(a(t, t));
    }
    return out;
}

// Content-1 copy of v with the first nonzero entry positive.
inline Divisor primitive_scale(Divisor v) {
    Int g = gcd_list(v);
    if (g == 0) throw std::domain_error("primitive_scale of the zero vector");
    for (Int& x : v) x /= g;
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
    return v;
}

// ---- exact rational elimination -------------------------------------------

using RatMatrix = std::vector<std::vector<Rat>>;

// Reduced row echelon form in place; returns the pivot column of each
// pivot row, in order.
inline std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    if (m.empty()) return pivot_cols;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rat inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

// Clear denominators and scale to a primitive integer vector.
inline Divisor primitive_from_rational(const std::vector<Rat>& v) {
    Int lcm_den = 1;
    for (const Rat& x : v)
        lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x));
    Divisor w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * lcm_den;
        w[i] = boost::multiprecision::numerator(s);
    }
    return primitive_scale(std::move(w));
}

namespace detail {

inline std::vector<Divisor> kernel_from_rref(const RatMatrix& m,
                                             const std::vector<std::size_t>& pivot_cols,
                                             std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<Divisor> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            v[pivot_cols[r]] = -m[r][f];
        basis.push_back(primitive_from_rational(v));
    }
    return basis;
}

} // namespace detail

// Basis of {v : m v = 0} over Q, each vector scaled to a primitive integer
// vector; ordered by the echelon free columns.
inline std::vector<Divisor> rational_kernel(const IntMatrix& m) {
    RatMatrix q(m.rows(), std::vector<Rat>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            q[i][j] = Rat(m(i, j));
    auto pivots = rref(q);
    return detail::kernel_from_rref(q, pivots, m.cols());
}

} // namespace ssgraph
