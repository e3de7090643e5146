#pragma once

/**
 * @file continuant.hpp
 * @brief Continuant polynomials alpha/beta/pi evaluated at ring points.
 *
 * The three families encode the Leibniz expansion of a periodic tridiagonal
 * determinant with period k: alpha collects the monomials free of y_k, beta
 * those containing y_k once, and pi = alpha + beta. Evaluation substitutes
 * x_i <- a_i and y_i <- -d_i, where d_i is the product of the two
 * off-diagonal entries in slot i.
 *
 * The production path is the three-term recurrences (linear in k); the
 * combinatorial definition is also implemented, by direct monomial
 * construction, as an exponential-cost oracle for small r, k.
 */

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ring.hpp"

namespace ktz {

/**
 * Evaluations of the first-period continuants at one (a, d) point:
 * alpha[r] for 0 <= r <= k, beta[r] for 0 <= r <= k+1, pi = alpha[k]+beta[k],
 * and d = d_1 * ... * d_k recovered as the determinant of the 2x2 transfer
 * product (alpha[k]*beta[k] - alpha[k-1]*beta[k+1]). The evaluation point is
 * kept so shifted work can reuse it.
 */
template <typename Elem>
struct continuant_table {
    std::size_t k = 0;
    std::vector<Elem> alpha;  // alpha[0..k]
    std::vector<Elem> beta;   // beta[0..k+1]
    Elem pi;
    Elem d;
    std::vector<Elem> a;      // diagonal values a_1..a_k
    std::vector<Elem> dvals;  // off-diagonal products d_1..d_k
};

/// How the table obtains d; the transfer determinant needs 6 operations
/// regardless of k, the direct product k-1.
enum class d_strategy { transfer_det, direct_product };

template <Ring R>
continuant_table<typename R::elem> build_table(const R& ring,
                                               const std::vector<typename R::elem>& a,
                                               const std::vector<typename R::elem>& d,
                                               d_strategy ds = d_strategy::transfer_det) {
    const std::size_t k = a.size();
    if (k < 1 || d.size() != k) throw std::invalid_argument("build_table: need k >= 1 seed values");

    continuant_table<typename R::elem> t;
    t.k = k;
    t.a = a;
    t.dvals = d;

    t.alpha.reserve(k + 1);
    t.alpha.push_back(ring.one());
    t.alpha.push_back(a[0]);
    for (std::size_t r = 1; r + 1 <= k; ++r)
        t.alpha.push_back(ring.sub(ring.mul(a[r], t.alpha[r]), ring.mul(d[r - 1], t.alpha[r - 1])));

    t.beta.reserve(k + 2);
    t.beta.push_back(ring.zero());
    t.beta.push_back(ring.zero());
    t.beta.push_back(ring.neg(d[k - 1]));
    for (std::size_t r = 2; r <= k; ++r)
        t.beta.push_back(ring.sub(ring.mul(a[r - 1], t.beta[r]), ring.mul(d[r - 2], t.beta[r - 1])));

    t.pi = ring.add(t.alpha[k], t.beta[k]);
    if (ds == d_strategy::transfer_det) {
        t.d = ring.sub(ring.mul(t.alpha[k], t.beta[k]), ring.mul(t.alpha[k - 1], t.beta[k + 1]));
    } else {
        t.d = d[0];
        for (std::size_t i = 1; i < k; ++i) t.d = ring.mul(t.d, d[i]);
    }
    return t;
}

/// Table at the cyclically rotated point sigma_s(a), sigma_s(d).
template <Ring R>
continuant_table<typename R::elem> shifted_table(const R& ring,
                                                 const std::vector<typename R::elem>& a,
                                                 const std::vector<typename R::elem>& d,
                                                 std::size_t s,
                                                 d_strategy ds = d_strategy::transfer_det) {
    const std::size_t k = a.size();
    if (k < 1 || d.size() != k) throw std::invalid_argument("shifted_table: need k >= 1 seed values");
    s %= k;
    if (s == 0) return build_table(ring, a, d, ds);
    std::vector<typename R::elem> ra, rd;
    ra.reserve(k);
    rd.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        ra.push_back(a[(s + i) % k]);
        rd.push_back(d[(s + i) % k]);
    }
    return build_table(ring, ra, rd, ds);
}

/// alpha(n, k) for any n >= 0 via the periodically extended recurrence
/// alpha(j) = a_j alpha(j-1) - d_{j-1} alpha(j-2). This also equals the
/// determinant of the order-n matrix with these diagonals.
template <Ring R>
typename R::elem alpha_extend(const R& ring, const std::vector<typename R::elem>& a,
                              const std::vector<typename R::elem>& d, std::size_t n) {
    const std::size_t k = a.size();
    if (k < 1 || d.size() != k) throw std::invalid_argument("alpha_extend: need k >= 1 seed values");
    if (n == 0) return ring.one();
    typename R::elem prev = ring.one();
    typename R::elem cur = a[0];
    for (std::size_t j = 2; j <= n; ++j) {
        typename R::elem next =
            ring.sub(ring.mul(a[(j - 1) % k], cur), ring.mul(d[(j - 2) % k], prev));
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Second-period value alpha(k + r, k) = alpha(k)alpha(r) + alpha(k-1)beta(r+1),
/// three operations from an existing table. Requires 0 <= r < k.
template <Ring R>
typename R::elem second_period_alpha(const R& ring, const continuant_table<typename R::elem>& t,
                                     std::size_t r) {
    if (r >= t.k) throw std::invalid_argument("second_period_alpha: need r < k");
    return ring.add(ring.mul(t.alpha[t.k], t.alpha[r]),
                    ring.mul(t.alpha[t.k - 1], t.beta[r + 1]));
}

enum class continuant_kind { alpha, beta, pi };

namespace detail {

/// Builds one continuant monomial directly: slots 1..r start as the x values
/// a_slot; each chosen index i consumes slots i and i+1 (slot r+1 wraps to
/// slot 1) and contributes y_i = -d_i, except index r which contributes
/// y_k = -d_k. Indices must never collide; collisions are a programming
/// error in the enumerator.
template <Ring R>
typename R::elem continuant_monomial(const R& ring, std::size_t r, std::size_t k,
                                     const std::vector<typename R::elem>& a,
                                     const std::vector<typename R::elem>& d,
                                     const std::vector<std::size_t>& indices) {
    std::vector<bool> used(r + 1, false);  // slots 1..r
    typename R::elem prod = ring.one();
    std::size_t ycount = 0;
    for (std::size_t i : indices) {
        std::size_t s1 = i;
        std::size_t s2 = (i == r) ? 1 : i + 1;  // slot r+1 wraps to slot 1
        if (used[s1] || used[s2]) throw std::logic_error("continuant_monomial: slot collision");
        used[s1] = true;
        used[s2] = true;
        const typename R::elem& y = (i < r) ? d[i - 1] : d[k - 1];
        prod = ring.mul(prod, y);
        ++ycount;
    }
    for (std::size_t s = 1; s <= r; ++s)
        if (!used[s]) prod = ring.mul(prod, a[(s - 1) % k]);
    if (ycount % 2 == 1) prod = ring.neg(prod);  // each y carries a minus sign
    return prod;
}

/// Enumerates subsets of {lo, lo+1, ..., hi} with pairwise gaps >= 2 and
/// feeds each (prefixed by `forced`) to the visitor.
template <typename Visit>
void gap2_subsets(std::size_t lo, std::size_t hi, std::vector<std::size_t>& acc, Visit&& visit) {
    visit(acc);
    if (lo > hi) return;
    for (std::size_t i = lo; i <= hi; ++i) {
        acc.push_back(i);
        gap2_subsets(i + 2, hi, acc, visit);
        acc.pop_back();
    }
}

}  // namespace detail

/**
 * Evaluation of alpha/beta/pi(r, k) straight from the combinatorial
 * definition: enumerate the admissible index sets (gaps of at least two,
 * cyclically for pi) and sum the directly constructed monomials.
 * Exponential in r; rejected beyond r, k <= 12. alpha(-1, k) = 0 is allowed
 * via r = -1.
 */
template <Ring R>
typename R::elem continuant_def_oracle(const R& ring, continuant_kind kind, long r_signed,
                                       std::size_t k, const std::vector<typename R::elem>& a,
                                       const std::vector<typename R::elem>& d) {
    if (k < 1 || k > 12 || a.size() != k || d.size() != k)
        throw std::invalid_argument("continuant_def_oracle: need seed vectors of length k <= 12");
    if (kind == continuant_kind::alpha && r_signed == -1) return ring.zero();
    if (r_signed < 0) throw std::invalid_argument("continuant_def_oracle: negative r");
    const std::size_t r = static_cast<std::size_t>(r_signed);
    if (r > 12) throw std::invalid_argument("continuant_def_oracle: r capped at 12");
    const std::size_t rmax = (kind == continuant_kind::beta) ? k + 1 : k;
    if (r > rmax) throw std::invalid_argument("continuant_def_oracle: r out of range");

    typename R::elem acc = ring.zero();
    std::vector<std::size_t> idx;
    auto add_monomial = [&](const std::vector<std::size_t>& indices) {
        acc = ring.add(acc, detail::continuant_monomial(ring, r, k, a, d, indices));
    };

    switch (kind) {
        case continuant_kind::alpha:
            if (r == 0) return ring.one();
            detail::gap2_subsets(1, r - 1, idx, add_monomial);
            return acc;
        case continuant_kind::pi:
            if (r == 0) return ring.one();
            detail::gap2_subsets(1, r, idx, [&](const std::vector<std::size_t>& s) {
                // the cyclic rule also forbids 1 and r together ({1} itself when r = 1)
                if (!s.empty() && s.front() == 1 && s.back() == r) return;
                add_monomial(s);
            });
            return acc;
        case continuant_kind::beta:
            if (r < 2) return ring.zero();
            detail::gap2_subsets(2, r - 2, idx, [&](const std::vector<std::size_t>& s) {
                std::vector<std::size_t> with_r = s;
                with_r.push_back(r);
                add_monomial(with_r);
            });
            return acc;
    }
    throw std::logic_error("continuant_def_oracle: unreachable");
}

}  // namespace ktz
