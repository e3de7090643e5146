#pragma once

/**
 * @file inverse.hpp
 * @brief Inverse entries and full inverses via the adjugate formula.
 *
 * Entry (i, j) of the inverse is
 *   (-1)^{i+j} * prod(b or c, min..max-1) * D(min-1) * D_max(n-max) / D(n),
 * where the D's are leading and trailing principal determinants. The library
 * never divides silently: every entry carries an exact numerator and the
 * shared determinant, and the quotient is filled in only when the
 * determinant is a unit.
 *
 * inv_entry / inv_full exploit the period (table-sharing, cyclic product
 * batches); the *_general variants are the straight recurrences for a
 * non-periodic matrix given as n <= k.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "continuant.hpp"
#include "determinant.hpp"
#include "fibonacci.hpp"
#include "ktoeplitz.hpp"
#include "ring.hpp"

namespace ktz {

template <typename Elem>
struct inverse_entry {
    std::size_t row = 0;
    std::size_t col = 0;
    Elem numerator;                 // sign * off-diagonal product * two bordering minors
    Elem det;                       // determinant of the full matrix
    std::optional<Elem> quotient;   // numerator / det, present iff det is a unit
};

template <typename Elem>
struct inverse_result {
    std::size_t n = 0;
    Elem det;
    bool unit = false;              // when true, entries are the inverse itself
    std::vector<Elem> entries;      // row-major; quotients if unit, else signed numerators

    const Elem& at(std::size_t i, std::size_t j) const { return entries[(i - 1) * n + (j - 1)]; }
};

namespace detail {

/// Leading principal determinants evaluated over one continuant table, with
/// Fibonacci pairs cached per quotient. Orders at most k come straight from
/// the table; larger ones cost one pair per new quotient plus 6 operations.
template <Ring R>
class table_determinants {
public:
    table_determinants(const R& ring, const continuant_table<typename R::elem>& t)
        : ring_(&ring), t_(&t) {}

    typename R::elem at(std::size_t order) {
        if (order <= t_->k) return t_->alpha[order];
        const std::size_t m = order / t_->k;
        const std::size_t r = order % t_->k;
        int_tick(*ring_);
        auto it = pairs_.find(m);
        if (it == pairs_.end()) {
            auto p = fib_pair_dnc(*ring_, t_->pi, t_->d, static_cast<std::uint64_t>(m));
            it = pairs_.emplace(m, cached{p.u, ring_->mul(t_->d, p.u_prev)}).first;
        }
        auto alpha_kr = second_period_alpha(*ring_, *t_, r);
        return ring_->sub(ring_->mul(it->second.u, alpha_kr),
                          ring_->mul(it->second.du_prev, t_->alpha[r]));
    }

private:
    struct cached {
        typename R::elem u;
        typename R::elem du_prev;
    };
    const R* ring_;
    const continuant_table<typename R::elem>* t_;
    std::map<std::size_t, cached> pairs_;
};

template <Ring R>
void check_entry_indices(const ktoeplitz_spec<typename R::elem>& s, std::size_t i, std::size_t j) {
    if (i < 1 || i > s.n || j < 1 || j > s.n)
        throw std::invalid_argument("inverse entry: index out of range");
}

}  // namespace detail

/// One entry through the periodic machinery; requires n > k.
template <InvertibleRing R>
inverse_entry<typename R::elem> inv_entry(const R& ring, const ktoeplitz_spec<typename R::elem>& s,
                                          std::size_t i, std::size_t j) {
    validate_spec(s);
    detail::check_entry_indices<R>(s, i, j);
    if (s.n <= s.k) throw std::invalid_argument("inv_entry: requires n > k (see inv_entry_general)");

    const std::size_t p = std::min(i, j);
    const std::size_t q = std::max(i, j);

    auto d = offdiag_products(ring, s);
    auto table = build_table(ring, s.a, d);
    detail::table_determinants<R> lead(ring, table);
    auto det_n = lead.at(s.n);
    auto det_p = lead.at(p - 1);

    auto tshift = shifted_table(ring, s.a, d, q % s.k);
    detail::table_determinants<R> trail(ring, tshift);
    auto det_q = trail.at(s.n - q);

    typename R::elem numerator = ring.mul(det_p, det_q);
    if (q > p) {
        const auto& vec = (i <= j) ? s.b : s.c;
        const std::size_t delta = q - p;
        const std::size_t mq = delta / s.k;
        const std::size_t rq = delta % s.k;
        int_tick(ring);
        const std::size_t start = (p - 1) % s.k;

        typename R::elem prefix = ring.one();
        typename R::elem full = ring.one();
        const std::size_t chain_len = (mq >= 1) ? s.k : rq;
        typename R::elem run = vec[start];
        if (rq == 1) prefix = run;
        if (chain_len == 1) full = run;
        for (std::size_t l = 2; l <= chain_len; ++l) {
            run = ring.mul(run, vec[(start + l - 1) % s.k]);
            if (l == rq) prefix = run;
            if (l == s.k) full = run;
        }
        typename R::elem prod;
        if (mq == 0) {
            prod = prefix;
        } else {
            auto powered = ring_power(ring, full, static_cast<std::uint64_t>(mq));
            prod = (rq == 0) ? powered : ring.mul(powered, prefix);
        }
        numerator = ring.mul(prod, numerator);
    }
    if ((i + j) % 2 == 1) numerator = ring.neg(numerator);

    return {i, j, numerator, det_n, ring.divide(numerator, det_n)};
}

/// One entry of a non-periodic matrix (n <= k): shared d_1..d_n, two
/// recurrence sweeps, a direct product.
template <InvertibleRing R>
inverse_entry<typename R::elem> inv_entry_general(const R& ring,
                                                  const ktoeplitz_spec<typename R::elem>& s,
                                                  std::size_t i, std::size_t j) {
    validate_spec(s);
    detail::check_entry_indices<R>(s, i, j);
    if (s.n > s.k) throw std::invalid_argument("inv_entry_general: requires n <= k (see inv_entry)");

    const std::size_t p = std::min(i, j);
    const std::size_t q = std::max(i, j);
    const std::size_t n = s.n;

    std::vector<typename R::elem> d;
    d.reserve(n);
    for (std::size_t t = 0; t < n; ++t) d.push_back(ring.mul(s.b[t], s.c[t]));

    // leading determinants up to n, keeping the order p-1 value on the way
    typename R::elem det_p = ring.one();
    typename R::elem prev = ring.one();
    typename R::elem cur = s.a[0];
    if (p - 1 == 1) det_p = cur;
    for (std::size_t t = 2; t <= n; ++t) {
        typename R::elem next = ring.sub(ring.mul(s.a[t - 1], cur), ring.mul(d[t - 2], prev));
        prev = cur;
        cur = next;
        if (t == p - 1) det_p = cur;
    }
    typename R::elem det_n = (n == 1) ? s.a[0] : cur;

    // trailing determinant of order n - q, swept from the bottom edge
    typename R::elem trail2 = ring.one();                // order 0
    typename R::elem trail = s.a[n - 1];                 // order 1, at shift n-1
    typename R::elem det_q = (q == n) ? trail2 : trail;
    for (std::size_t t = n - 1; t-- > q;) {
        typename R::elem next = ring.sub(ring.mul(s.a[t], trail), ring.mul(d[t], trail2));
        trail2 = trail;
        trail = next;
    }
    if (q < n) det_q = trail;

    typename R::elem numerator = ring.mul(det_p, det_q);
    if (q > p) {
        const auto& vec = (i <= j) ? s.b : s.c;
        typename R::elem prod = vec[p - 1];
        for (std::size_t t = p; t < q - 1; ++t) prod = ring.mul(prod, vec[t]);
        numerator = ring.mul(prod, numerator);
    }
    if ((i + j) % 2 == 1) numerator = ring.neg(numerator);

    return {i, j, numerator, det_n, ring.divide(numerator, det_n)};
}

namespace detail {

/// Shared assembly for the two full-inverse paths. The product provider maps
/// (start row, span) to the off-diagonal product of that span.
template <InvertibleRing R, typename ProdB, typename ProdC, typename Sink>
typename R::elem assemble_inverse(const R& ring, std::size_t n,
                                  const std::vector<typename R::elem>& lead,
                                  const std::vector<typename R::elem>& trail, ProdB&& prod_b,
                                  ProdC&& prod_c, Sink&& sink) {
    const typename R::elem det_n = lead[n];
    auto inv = ring.try_invert(det_n);
    if (inv) {
        auto neg_inv = ring.neg(*inv);
        for (std::size_t i = 1; i <= n; ++i) {
            auto diag = ring.mul(lead[i - 1], trail[i]);
            sink(i, i, ring.mul(diag, *inv));
            for (std::size_t j = i + 1; j <= n; ++j) {
                auto t1 = ring.mul(lead[i - 1], trail[j]);
                auto t2 = ring.mul(t1, ((i + j) % 2 == 1) ? neg_inv : *inv);
                sink(i, j, ring.mul(t2, prod_b(i, j - i)));
                sink(j, i, ring.mul(t2, prod_c(i, j - i)));
            }
        }
    } else {
        for (std::size_t i = 1; i <= n; ++i) {
            sink(i, i, ring.mul(lead[i - 1], trail[i]));
            for (std::size_t j = i + 1; j <= n; ++j) {
                auto t1 = ring.mul(lead[i - 1], trail[j]);
                auto nb = ring.mul(t1, prod_b(i, j - i));
                auto nc = ring.mul(t1, prod_c(i, j - i));
                if ((i + j) % 2 == 1) {
                    nb = ring.neg(nb);
                    nc = ring.neg(nc);
                }
                sink(i, j, nb);
                sink(j, i, nc);
            }
        }
    }
    return det_n;
}

/// Cyclic product batches for one diagonal seed: per-residue prefix chains,
/// powers of the full-period product, and their pairwise combinations. Any
/// span product is then a single lookup.
template <Ring R>
class periodic_products {
public:
    periodic_products(const R& ring, const std::vector<typename R::elem>& vec, std::size_t qmax)
        : k_(vec.size()), qmax_(qmax) {
        chains_.resize(k_);
        for (std::size_t sr = 0; sr < k_; ++sr) {
            const std::size_t len = (sr == 0) ? k_ : k_ - 1;
            chains_[sr].reserve(len);
            if (len == 0) continue;
            chains_[sr].push_back(vec[sr]);
            for (std::size_t l = 2; l <= len; ++l)
                chains_[sr].push_back(ring.mul(chains_[sr].back(), vec[(sr + l - 1) % k_]));
        }
        pows_.push_back(ring.one());
        if (qmax_ >= 1) {
            pows_.push_back(chains_[0][k_ - 1]);
            for (std::size_t q = 2; q <= qmax_; ++q)
                pows_.push_back(ring.mul(pows_.back(), pows_[1]));
        }
        if (k_ >= 2 && qmax_ >= 1) {
            combos_.assign(k_ * (k_ - 1) * qmax_, ring.zero());
            for (std::size_t sr = 0; sr < k_; ++sr)
                for (std::size_t l = 1; l < k_; ++l)
                    for (std::size_t q = 1; q <= qmax_; ++q)
                        combos_[combo_index(sr, l, q)] = ring.mul(chains_[sr][l - 1], pows_[q]);
        }
    }

    /// Product of `span` consecutive seed entries starting at 1-based row i.
    typename R::elem operator()(std::size_t i, std::size_t span) const {
        const std::size_t sr = (i - 1) % k_;
        const std::size_t q = span / k_;
        const std::size_t l = span % k_;
        if (l == 0) return pows_[q];
        if (q == 0) return chains_[sr][l - 1];
        return combos_[combo_index(sr, l, q)];
    }

private:
    std::size_t combo_index(std::size_t sr, std::size_t l, std::size_t q) const {
        return (sr * (k_ - 1) + (l - 1)) * qmax_ + (q - 1);
    }

    std::size_t k_;
    std::size_t qmax_;
    std::vector<std::vector<typename R::elem>> chains_;
    std::vector<typename R::elem> pows_;
    std::vector<typename R::elem> combos_;
};

}  // namespace detail

/**
 * Streams every entry of the inverse (or of the signed adjugate when the
 * determinant is not a unit) to sink(i, j, value); returns the determinant.
 * One pass of leading determinants, one of trailing determinants, cyclic
 * product batches for each off-diagonal, then 4-5 operations per entry pair.
 */
template <InvertibleRing R, typename Sink>
typename R::elem inv_full_stream(const R& ring, const ktoeplitz_spec<typename R::elem>& s,
                                 Sink&& sink) {
    validate_spec(s);
    const std::size_t n = s.n;
    auto d = offdiag_products(ring, s);

    std::vector<typename R::elem> lead;
    lead.reserve(n + 1);
    lead.push_back(ring.one());
    lead.push_back(s.a[0]);
    for (std::size_t j = 2; j <= n; ++j)
        lead.push_back(
            ring.sub(ring.mul(s.a[(j - 1) % s.k], lead[j - 1]), ring.mul(d[(j - 2) % s.k], lead[j - 2])));

    std::vector<typename R::elem> trail(n + 1, ring.zero());
    trail[n] = ring.one();
    trail[n - 1] = s.a[(n - 1) % s.k];
    for (std::size_t t = n - 1; t-- > 0;)
        trail[t] = ring.sub(ring.mul(s.a[t % s.k], trail[t + 1]), ring.mul(d[t % s.k], trail[t + 2]));

    const std::size_t qmax = (n - 1) / s.k;
    int_tick(ring);
    detail::periodic_products<R> prod_b(ring, s.b, qmax);
    detail::periodic_products<R> prod_c(ring, s.c, qmax);

    return detail::assemble_inverse(ring, n, lead, trail, prod_b, prod_c,
                                    std::forward<Sink>(sink));
}

template <InvertibleRing R>
inverse_result<typename R::elem> inv_full(const R& ring, const ktoeplitz_spec<typename R::elem>& s) {
    inverse_result<typename R::elem> out;
    out.n = s.n;
    out.entries.assign(s.n * s.n, ring.zero());
    out.det = inv_full_stream(ring, s, [&](std::size_t i, std::size_t j, typename R::elem v) {
        out.entries[(i - 1) * s.n + (j - 1)] = std::move(v);
    });
    out.unit = ring.try_invert(out.det).has_value();
    return out;
}

/// Runs the full algorithm but discards the entries; for instrumentation at
/// orders where storing n^2 elements is pointless.
template <InvertibleRing R>
typename R::elem inv_full_count_only(const R& ring, const ktoeplitz_spec<typename R::elem>& s) {
    return inv_full_stream(ring, s, [](std::size_t, std::size_t, const typename R::elem&) {});
}

/// Full inverse of a non-periodic matrix (n <= k): straight recurrences and
/// triangular prefix-product tables.
template <InvertibleRing R, typename Sink>
typename R::elem inv_full_general_stream(const R& ring, const ktoeplitz_spec<typename R::elem>& s,
                                         Sink&& sink) {
    validate_spec(s);
    if (s.n > s.k) throw std::invalid_argument("inv_full_general: requires n <= k (see inv_full)");
    const std::size_t n = s.n;

    std::vector<typename R::elem> d;
    d.reserve(n);
    for (std::size_t t = 0; t < n; ++t) d.push_back(ring.mul(s.b[t], s.c[t]));

    std::vector<typename R::elem> lead;
    lead.reserve(n + 1);
    lead.push_back(ring.one());
    lead.push_back(s.a[0]);
    for (std::size_t j = 2; j <= n; ++j)
        lead.push_back(ring.sub(ring.mul(s.a[j - 1], lead[j - 1]), ring.mul(d[j - 2], lead[j - 2])));

    std::vector<typename R::elem> trail(n + 1, ring.zero());
    trail[n] = ring.one();
    trail[n - 1] = s.a[n - 1];
    for (std::size_t t = n - 1; t-- > 0;)
        trail[t] = ring.sub(ring.mul(s.a[t], trail[t + 1]), ring.mul(d[t], trail[t + 2]));

    // chains[i][l-1] = product of l consecutive entries starting at row i+1
    auto build_chains = [&](const std::vector<typename R::elem>& vec) {
        std::vector<std::vector<typename R::elem>> chains(n >= 1 ? n - 1 : 0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            chains[i].reserve(n - 1 - i);
            chains[i].push_back(vec[i]);
            for (std::size_t l = 2; l <= n - 1 - i; ++l)
                chains[i].push_back(ring.mul(chains[i].back(), vec[i + l - 1]));
        }
        return chains;
    };
    auto chains_b = build_chains(s.b);
    auto chains_c = build_chains(s.c);
    auto prod_b = [&](std::size_t i, std::size_t span) { return chains_b[i - 1][span - 1]; };
    auto prod_c = [&](std::size_t i, std::size_t span) { return chains_c[i - 1][span - 1]; };

    return detail::assemble_inverse(ring, n, lead, trail, prod_b, prod_c,
                                    std::forward<Sink>(sink));
}

template <InvertibleRing R>
inverse_result<typename R::elem> inv_full_general(const R& ring,
                                                  const ktoeplitz_spec<typename R::elem>& s) {
    inverse_result<typename R::elem> out;
    out.n = s.n;
    out.entries.assign(s.n * s.n, ring.zero());
    out.det = inv_full_general_stream(ring, s, [&](std::size_t i, std::size_t j, typename R::elem v) {
        out.entries[(i - 1) * s.n + (j - 1)] = std::move(v);
    });
    out.unit = ring.try_invert(out.det).has_value();
    return out;
}

}  // namespace ktz
