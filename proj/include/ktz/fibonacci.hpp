#pragma once

/**
 * @file fibonacci.hpp
 * @brief Generalized Fibonacci polynomials U_m(x, y) and 2x2 matrix powers.
 *
 * U_0 = 0, U_1 = 1, U_{m+1} = x*U_m - y*U_{m-1}. Three evaluators are
 * provided: the linear recurrence (3(m-1) ring operations), a logarithmic
 * divide-and-conquer scheme over the binary expansion of m, and the direct
 * summation form used as an independent oracle. Powers of a 2x2 matrix are
 * linear combinations of the matrix and the identity with U-coefficients
 * evaluated at the trace and determinant.
 */

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ring.hpp"

namespace ktz {

/// The pair (U_m, U_{m-1}); u_prev is zero by convention when m == 0.
template <typename Elem>
struct fib_pair {
    Elem u;
    Elem u_prev;
    std::uint64_t m = 0;
};

/// Linear iteration; exactly 3(m-1) ring operations for m >= 1.
template <Ring R>
fib_pair<typename R::elem> fib_pair_recurrence(const R& ring, const typename R::elem& x,
                                               const typename R::elem& y, std::uint64_t m) {
    if (m == 0) return {ring.zero(), ring.zero(), 0};
    typename R::elem prev = ring.zero();  // U_0
    typename R::elem cur = ring.one();    // U_1
    for (std::uint64_t i = 1; i < m; ++i) {
        typename R::elem next = ring.sub(ring.mul(x, cur), ring.mul(y, prev));
        prev = cur;
        cur = next;
    }
    return {cur, prev, m};
}

namespace detail {

/// One divide-and-conquer evaluation of U_m for m >= 2, walking the binary
/// expansion of m from the leading bit down to the lowest set bit, then
/// through the trailing zeros. Steps whose results cannot reach the returned
/// value are skipped. The caller accounts for the expansion itself; parity
/// tests are ticked here.
template <Ring R>
typename R::elem fib_dnc_single(const R& ring, const typename R::elem& x,
                                const typename R::elem& y, std::uint64_t m) {
    const int s = std::countr_zero(m);
    const int lead = std::bit_width(m) - 1;
    const typename R::elem two = ring.from_int(2);

    typename R::elem uh = ring.one();
    typename R::elem vl = two;
    typename R::elem vh = x;
    typename R::elem ql = ring.one();
    typename R::elem qh = ring.one();

    for (int i = lead; i >= s + 1; --i) {
        int_tick(ring);
        ql = ring.mul(ql, qh);
        if ((m >> i) & 1u) {
            qh = ring.mul(ql, y);
            uh = ring.mul(uh, vh);
            vl = ring.sub(ring.mul(vh, vl), ring.mul(x, ql));
            vh = ring.sub(ring.mul(vh, vh), ring.mul(two, qh));
        } else {
            qh = ql;
            uh = ring.sub(ring.mul(uh, vl), ql);
            vh = ring.sub(ring.mul(vh, vl), ring.mul(x, ql));
            vl = ring.sub(ring.mul(vl, vl), ring.mul(two, ql));
        }
    }

    ql = ring.mul(ql, qh);
    if (s == 0) return ring.sub(ring.mul(uh, vl), ql);

    qh = ring.mul(ql, y);
    uh = ring.sub(ring.mul(uh, vl), ql);
    vl = ring.sub(ring.mul(vh, vl), ring.mul(x, ql));
    ql = ring.mul(ql, qh);
    for (int i = 1; i <= s; ++i) {
        uh = ring.mul(uh, vl);
        if (i < s) {
            vl = ring.sub(ring.mul(vl, vl), ring.mul(two, ql));
            ql = ring.mul(ql, ql);
        }
    }
    return uh;
}

}  // namespace detail

/// Divide-and-conquer pair evaluation: two runs, one for m and one for m-1.
/// At most 18*floor(log2 m)+7 ring operations and 3*floor(log2 m) integer
/// steps for m >= 2; m in {0, 1} is immediate.
template <Ring R>
fib_pair<typename R::elem> fib_pair_dnc(const R& ring, const typename R::elem& x,
                                        const typename R::elem& y, std::uint64_t m) {
    if (m == 0) return {ring.zero(), ring.zero(), 0};
    if (m == 1) return {ring.one(), ring.zero(), 1};
    int_tick(ring, static_cast<std::uint64_t>(std::bit_width(m) - 1));  // expansion of m
    typename R::elem u = detail::fib_dnc_single(ring, x, y, m);
    int_tick(ring);  // expansion of m-1 follows in one step
    typename R::elem up =
        (m - 1 == 1) ? ring.one() : detail::fib_dnc_single(ring, x, y, m - 1);
    return {u, up, m};
}

/// Direct evaluation of the summation form
///   U_m(x, y) = sum_i (-1)^i C(m-1-i, i) x^{m-1-2i} y^i,
/// with binomial images built additively (Pascal rows) inside the ring.
/// Quadratic in m; this is the oracle path, not the production path.
template <Ring R>
typename R::elem fib_closed_form(const R& ring, const typename R::elem& x,
                                 const typename R::elem& y, std::uint64_t m) {
    if (m == 0) return ring.zero();
    if (m == 1) return ring.one();
    const std::size_t imax = static_cast<std::size_t>((m - 1) / 2);

    std::vector<typename R::elem> xp{ring.one()};
    xp.reserve(m);
    for (std::uint64_t e = 1; e <= m - 1; ++e) xp.push_back(ring.mul(xp.back(), x));
    std::vector<typename R::elem> yp{ring.one()};
    yp.reserve(imax + 1);
    for (std::size_t e = 1; e <= imax; ++e) yp.push_back(ring.mul(yp.back(), y));

    // binom[i] holds the ring image of C(m-1-i, i), harvested from Pascal's
    // triangle as the rows pass the anti-diagonal row + col = m-1.
    std::vector<typename R::elem> binom(imax + 1, ring.zero());
    std::vector<typename R::elem> row{ring.one()};
    auto harvest = [&](std::uint64_t n) {
        std::uint64_t i = m - 1 - n;
        if (i <= imax && i <= n) binom[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i)];
    };
    harvest(0);
    for (std::uint64_t n = 1; n <= m - 1; ++n) {
        bool grew = false;
        if (row.size() <= imax) {
            row.push_back(ring.one());  // C(n, n) enters the window, already correct
            grew = true;
        }
        for (std::size_t j = row.size() - (grew ? 2 : 1); j >= 1; --j)
            row[j] = ring.add(row[j], row[j - 1]);
        harvest(n);
    }

    typename R::elem acc = ring.zero();
    for (std::size_t i = 0; i <= imax; ++i) {
        auto term = ring.mul(binom[i], ring.mul(xp[static_cast<std::size_t>(m - 1 - 2 * i)], yp[i]));
        acc = (i % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
    }
    return acc;
}

template <typename Elem>
struct mat2 {
    Elem e11, e12, e21, e22;
};

template <Ring R>
typename R::elem mat2_trace(const R& ring, const mat2<typename R::elem>& A) {
    return ring.add(A.e11, A.e22);
}

template <Ring R>
typename R::elem mat2_det(const R& ring, const mat2<typename R::elem>& A) {
    return ring.sub(ring.mul(A.e11, A.e22), ring.mul(A.e12, A.e21));
}

/// Naive 2x2 product, 12 ring operations.
template <Ring R>
mat2<typename R::elem> mat2_mul(const R& ring, const mat2<typename R::elem>& A,
                                const mat2<typename R::elem>& B) {
    return {ring.add(ring.mul(A.e11, B.e11), ring.mul(A.e12, B.e21)),
            ring.add(ring.mul(A.e11, B.e12), ring.mul(A.e12, B.e22)),
            ring.add(ring.mul(A.e21, B.e11), ring.mul(A.e22, B.e21)),
            ring.add(ring.mul(A.e21, B.e12), ring.mul(A.e22, B.e22))};
}

/// A^m = U_m(tr, det) A - det U_{m-1}(tr, det) I, for m >= 1.
template <Ring R>
mat2<typename R::elem> mat2_power_via_fib(const R& ring, const mat2<typename R::elem>& A,
                                          std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("mat2_power_via_fib: exponent must be >= 1");
    auto tr = mat2_trace(ring, A);
    auto det = mat2_det(ring, A);
    auto p = fib_pair_dnc(ring, tr, det, m);
    auto du = ring.mul(det, p.u_prev);
    return {ring.sub(ring.mul(p.u, A.e11), du), ring.mul(p.u, A.e12), ring.mul(p.u, A.e21),
            ring.sub(ring.mul(p.u, A.e22), du)};
}

/// Symmetric power sum over a factored characteristic polynomial:
/// sum_{i=0}^{m-1} l1^i l2^{m-1-i}. Test oracle; must agree with
/// fib_closed_form(l1 + l2, l1 * l2, m).
template <Ring R>
typename R::elem fib_via_eigen_sum(const R& ring, const typename R::elem& l1,
                                   const typename R::elem& l2, std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("fib_via_eigen_sum: order must be >= 1");
    std::vector<typename R::elem> p2{ring.one()};
    p2.reserve(m);
    for (std::uint64_t e = 1; e < m; ++e) p2.push_back(ring.mul(p2.back(), l2));
    typename R::elem acc = ring.zero();
    typename R::elem p1 = ring.one();
    for (std::uint64_t i = 0; i < m; ++i) {
        acc = ring.add(acc, ring.mul(p1, p2[static_cast<std::size_t>(m - 1 - i)]));
        if (i + 1 < m) p1 = ring.mul(p1, l1);
    }
    return acc;
}

}  // namespace ktz
