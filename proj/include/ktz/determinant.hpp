#pragma once

/**
 * @file determinant.hpp
 * @brief Determinants of tridiagonal k-Toeplitz matrices over any ring.
 *
 * Several routes to the same value, with different cost profiles:
 *
 *  - det_d1            three-term recurrence, 3n + k - 3 operations
 *  - det_d1_all        every leading principal determinant, same cost
 *  - det_d1_shifted_all  every trailing (shifted) determinant, same cost
 *  - det_d2            2x2 transfer-matrix product raised by squaring
 *  - det_d3            continuant table + generalized Fibonacci pair,
 *                      18 log2(m) + 7k + 12 ops, the default for n > k
 *  - det_d3_many       several orders over one table, 6 extra ops per order
 *                      sharing a quotient
 *  - det_d4            the tail-indexed variant of d3
 *  - det_general       the non-periodic recurrence for n <= k, 4n - 3 ops
 *  - det_reducible_factored  factored form when a diagonal has zeros
 *  - det_auto          det_general for n <= k, det_d3 otherwise
 *
 * Zero entries in b or c are legal everywhere; no irreducibility is assumed.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "continuant.hpp"
#include "fibonacci.hpp"
#include "ktoeplitz.hpp"
#include "ring.hpp"

namespace ktz {

template <Ring R>
typename R::elem det_d1(const R& ring, const ktoeplitz_spec<typename R::elem>& s) {
    validate_spec(s);
    if (s.n == 1) return s.a[0];
    auto d = offdiag_products(ring, s);
    typename R::elem prev = ring.one();  // order 0
    typename R::elem cur = s.a[0];       // order 1
    for (std::size_t j = 2; j <= s.n; ++j) {
        typename R::elem next =
            ring.sub(ring.mul(s.a[(j - 1) % s.k], cur), ring.mul(d[(j - 2) % s.k], prev));
        prev = cur;
        cur = next;
    }
    return cur;
}

/// All leading principal determinants, orders 0..n, at the cost of det_d1.
template <Ring R>
std::vector<typename R::elem> det_d1_all(const R& ring,
                                         const ktoeplitz_spec<typename R::elem>& s) {
    validate_spec(s);
    std::vector<typename R::elem> out;
    out.reserve(s.n + 1);
    out.push_back(ring.one());
    out.push_back(s.a[0]);
    if (s.n == 1) return out;
    auto d = offdiag_products(ring, s);
    for (std::size_t j = 2; j <= s.n; ++j)
        out.push_back(
            ring.sub(ring.mul(s.a[(j - 1) % s.k], out[j - 1]), ring.mul(d[(j - 2) % s.k], out[j - 2])));
    return out;
}

/// Trailing determinants: out[s] is the determinant of the order n-s block
/// whose diagonals start at slot s+1. out[0] is the full determinant.
template <Ring R>
std::vector<typename R::elem> det_d1_shifted_all(const R& ring,
                                                 const ktoeplitz_spec<typename R::elem>& s) {
    validate_spec(s);
    std::vector<typename R::elem> out(s.n + 1, ring.zero());
    out[s.n] = ring.one();
    out[s.n - 1] = s.a[(s.n - 1) % s.k];
    if (s.n == 1) return out;
    auto d = offdiag_products(ring, s);
    for (std::size_t t = s.n - 1; t-- > 0;)
        out[t] = ring.sub(ring.mul(s.a[t % s.k], out[t + 1]), ring.mul(d[t % s.k], out[t + 2]));
    return out;
}

namespace detail {

/// Transfer chain with the second column negated, so no negation is ever
/// materialized: tilde(s) = [alpha(s), -beta(s+1); alpha(s-1), -beta(s)].
template <typename Elem>
struct transfer_tilde {
    Elem a11, a12, a21, a22;
};

}  // namespace detail

/// Determinant from the 2x2 transfer product raised to the m-th power by
/// iterated squaring. Requires n > k.
template <Ring R>
typename R::elem det_d2(const R& ring, const ktoeplitz_spec<typename R::elem>& s) {
    validate_spec(s);
    if (s.n <= s.k) throw std::invalid_argument("det_d2: requires n > k");
    auto d = offdiag_products(ring, s);
    const std::size_t m = s.n / s.k;
    const std::size_t r = s.n % s.k;
    int_tick(ring);  // Euclidean split of n by k

    detail::transfer_tilde<typename R::elem> acc{s.a[0], d[s.k - 1], ring.one(), ring.zero()};
    detail::transfer_tilde<typename R::elem> tail = acc;  // snapshot at index r
    for (std::size_t i = 1; i < s.k; ++i) {
        detail::transfer_tilde<typename R::elem> next{
            ring.sub(ring.mul(s.a[i], acc.a11), ring.mul(d[i - 1], acc.a21)),
            ring.sub(ring.mul(s.a[i], acc.a12), ring.mul(d[i - 1], acc.a22)), acc.a11, acc.a12};
        acc = next;
        if (i + 1 == r) tail = acc;
    }

    mat2<typename R::elem> A{acc.a11, ring.neg(acc.a12), acc.a21, ring.neg(acc.a22)};
    mat2<typename R::elem> P = A;
    if (m >= 2) {
        const int lead = std::bit_width(m) - 1;
        int_tick(ring, static_cast<std::uint64_t>(lead));
        for (int i = lead - 1; i >= 0; --i) {
            int_tick(ring);
            P = mat2_mul(ring, P, P);
            if ((m >> i) & 1u) P = mat2_mul(ring, P, A);
        }
    }

    if (r == 0) return P.e11;
    return ring.sub(ring.mul(tail.a11, P.e11), ring.mul(tail.a12, P.e21));
}

/// Determinant as U(m) alpha(k+r) - d U(m-1) alpha(r) over one continuant
/// table, the Fibonacci pair evaluated at (pi, d). Requires n > k.
template <Ring R>
typename R::elem det_d3(const R& ring, const ktoeplitz_spec<typename R::elem>& s) {
    validate_spec(s);
    if (s.n <= s.k) throw std::invalid_argument("det_d3: requires n > k");
    auto d = offdiag_products(ring, s);
    const std::size_t m = s.n / s.k;
    const std::size_t r = s.n % s.k;
    int_tick(ring);  // Euclidean split of n by k

    auto table = build_table(ring, s.a, d);
    auto alpha_kr = second_period_alpha(ring, table, r);
    auto pair = fib_pair_dnc(ring, table.pi, table.d, static_cast<std::uint64_t>(m));
    return ring.sub(ring.mul(pair.u, alpha_kr),
                    ring.mul(ring.mul(table.d, pair.u_prev), table.alpha[r]));
}

/// Determinants of several orders over one shared table. Orders with the
/// same quotient share their Fibonacci pair; each extra such order costs 6
/// operations. All orders must exceed k.
template <Ring R>
std::vector<typename R::elem> det_d3_many(const R& ring,
                                          const ktoeplitz_spec<typename R::elem>& s,
                                          const std::vector<std::size_t>& orders) {
    validate_spec(s);
    for (auto n : orders)
        if (n <= s.k) throw std::invalid_argument("det_d3_many: all orders must exceed k");
    auto d = offdiag_products(ring, s);
    auto table = build_table(ring, s.a, d);

    struct shared_pair {
        typename R::elem u;
        typename R::elem du_prev;  // d * U(m-1), reused across equal quotients
    };
    std::map<std::size_t, shared_pair> pairs;

    std::vector<typename R::elem> out;
    out.reserve(orders.size());
    for (auto n : orders) {
        const std::size_t m = n / s.k;
        const std::size_t r = n % s.k;
        int_tick(ring);
        auto it = pairs.find(m);
        if (it == pairs.end()) {
            auto p = fib_pair_dnc(ring, table.pi, table.d, static_cast<std::uint64_t>(m));
            it = pairs.emplace(m, shared_pair{p.u, ring.mul(table.d, p.u_prev)}).first;
        }
        auto alpha_kr = second_period_alpha(ring, table, r);
        out.push_back(
            ring.sub(ring.mul(it->second.u, alpha_kr), ring.mul(it->second.du_prev, table.alpha[r])));
    }
    return out;
}

/// Determinant as U(m+1) alpha(r) + d_k d_1..d_r U(m) alpha_{r+1}(k-r-2),
/// the tail-indexed companion of det_d3. Requires n > k.
template <Ring R>
typename R::elem det_d4(const R& ring, const ktoeplitz_spec<typename R::elem>& s) {
    validate_spec(s);
    if (s.n <= s.k) throw std::invalid_argument("det_d4: requires n > k");
    auto d = offdiag_products(ring, s);
    const std::size_t m = s.n / s.k;
    const std::size_t r = s.n % s.k;
    int_tick(ring);

    auto table = build_table(ring, s.a, d);
    auto pair = fib_pair_dnc(ring, table.pi, table.d, static_cast<std::uint64_t>(m + 1));

    if (r == s.k - 1) return ring.mul(pair.u, table.alpha[r]);  // the factored boundary case

    // d' = d_k d_1 ... d_r is the determinant of the first r+1 transfer factors
    auto dprime =
        ring.sub(ring.mul(table.alpha[r + 1], table.beta[r + 1]), ring.mul(table.alpha[r], table.beta[r + 2]));

    // alpha shifted by r+1, extended to order k-r-2 over the rotated seeds
    auto alpha_shift =
        alpha_extend(ring, rotated_seed(s.a, r + 1), rotated_seed(d, r + 1), s.k - r - 2);

    return ring.add(ring.mul(pair.u, table.alpha[r]),
                    ring.mul(ring.mul(pair.u_prev, dprime), alpha_shift));
}

/// Non-periodic recurrence for n <= k: d_1..d_n then the three-term
/// recurrence, 4n - 3 operations.
template <Ring R>
typename R::elem det_general(const R& ring, const ktoeplitz_spec<typename R::elem>& s) {
    validate_spec(s);
    if (s.n > s.k) throw std::invalid_argument("det_general: requires n <= k");
    std::vector<typename R::elem> d;
    d.reserve(s.n);
    for (std::size_t i = 0; i < s.n; ++i) d.push_back(ring.mul(s.b[i], s.c[i]));
    if (s.n == 1) return s.a[0];
    typename R::elem prev = ring.one();
    typename R::elem cur = s.a[0];
    for (std::size_t j = 2; j <= s.n; ++j) {
        typename R::elem next = ring.sub(ring.mul(s.a[j - 1], cur), ring.mul(d[j - 2], prev));
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Which diagonal carries the declared zeros.
enum class zero_side { upper_b, lower_c };

/**
 * Factored determinant of a reducible matrix. The 1-based positions must
 * name zero entries of the chosen diagonal within the first period,
 * strictly increasing, with n > positions.front(). A zero splits the matrix
 * into block-triangular form, so the determinant is a product of smaller
 * shifted determinants; full-period repeats are raised by square-and-multiply.
 */
template <Ring R>
typename R::elem det_reducible_factored(const R& ring, const ktoeplitz_spec<typename R::elem>& s,
                                        const std::vector<std::size_t>& positions,
                                        zero_side side = zero_side::upper_b) {
    validate_spec(s);
    const auto& diag = (side == zero_side::upper_b) ? s.b : s.c;
    if (positions.empty()) throw std::invalid_argument("det_reducible_factored: no zero positions");
    for (std::size_t j = 0; j < positions.size(); ++j) {
        std::size_t p = positions[j];
        if (p < 1 || p > s.k) throw std::invalid_argument("det_reducible_factored: position out of range");
        if (j > 0 && positions[j - 1] >= p)
            throw std::invalid_argument("det_reducible_factored: positions must be strictly increasing");
        if (!is_zero(ring, diag[p - 1]))
            throw std::invalid_argument("det_reducible_factored: named position is not zero");
    }
    if (s.n <= positions.front())
        throw std::invalid_argument("det_reducible_factored: requires n > first zero position");

    auto d = offdiag_products(ring, s);
    const std::size_t q = positions.size();
    const std::size_t m = s.n / s.k;
    const std::size_t r = s.n % s.k;
    int_tick(ring);

    // p = 0 when the tail ends at or before the first zero; otherwise the
    // index with i_p < r <= i_{p+1}, taking i_{q+1} = i_1 + k.
    std::size_t p = 0;
    std::size_t rprime = r + s.k;
    if (r > positions.front()) {
        rprime = r;
        p = q;  // falls through unless some later position catches r
        for (std::size_t j = 1; j < q; ++j) {
            if (positions[j - 1] < r && r <= positions[j]) {
                p = j;
                break;
            }
        }
    }

    auto result = alpha_extend(ring, s.a, d, positions.front());
    for (std::size_t j = 1; j <= q; ++j) {
        const std::size_t ij = positions[j - 1];
        const std::size_t inext = (j == q) ? positions.front() + s.k : positions[j];
        long exponent = static_cast<long>(m);
        if (j == q)
            exponent += (p == 0) ? -1 : 0;
        else if (j < p)
            exponent += 1;
        if (exponent <= 0) continue;
        auto factor = alpha_extend(ring, rotated_seed(s.a, ij), rotated_seed(d, ij), inext - ij);
        result = ring.mul(result, ring_power(ring, factor, static_cast<std::uint64_t>(exponent)));
    }
    const std::size_t ip = (p == 0) ? positions.back() : positions[p - 1];
    auto tail = alpha_extend(ring, rotated_seed(s.a, ip), rotated_seed(d, ip), rprime - ip);
    return ring.mul(result, tail);
}

/// det_general for n <= k, det_d3 otherwise; always equal to det_d1.
template <Ring R>
typename R::elem det_auto(const R& ring, const ktoeplitz_spec<typename R::elem>& s) {
    validate_spec(s);
    return s.n <= s.k ? det_general(ring, s) : det_d3(ring, s);
}

}  // namespace ktz
