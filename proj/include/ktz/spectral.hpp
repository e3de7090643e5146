#pragma once

/**
 * @file spectral.hpp
 * @brief Characteristic polynomial and eigenvector construction.
 *
 * The characteristic polynomial is the determinant of the same banded
 * structure taken over the univariate polynomial ring, with diagonal entries
 * x - a_i. Eigenvalues over a ring are the lambda for which p(lambda) is a
 * zero divisor; an eigenvector is assembled from a nonzero annihilator
 * witness z, the running off-diagonal products, and the leading (or, for the
 * mirrored form, trailing) principal determinants of the lambda-shifted
 * matrix.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "determinant.hpp"
#include "fibonacci.hpp"
#include "ktoeplitz.hpp"
#include "poly.hpp"
#include "ring.hpp"

namespace ktz {

/// Lifts a spec over K to the spec over K[x] whose determinant is the
/// characteristic polynomial: diagonal x - a_i, off-diagonals as constants
/// (only their products enter any determinant, and those are unchanged).
/// Pure input preparation; costs no counted operations.
template <Ring R>
ktoeplitz_spec<typename poly_ring<R>::elem> charpoly_spec(const R& ring,
                                                          const ktoeplitz_spec<typename R::elem>& s) {
    validate_spec(s);
    using P = typename poly_ring<R>::elem;
    ktoeplitz_spec<P> lifted;
    lifted.n = s.n;
    lifted.k = s.k;
    lifted.a.reserve(s.k);
    lifted.b.reserve(s.k);
    lifted.c.reserve(s.k);
    for (std::size_t i = 0; i < s.k; ++i) {
        lifted.a.push_back(P{ring.neg(s.a[i]), ring.one()});
        P b{s.b[i]};
        P c{s.c[i]};
        if (is_zero(ring, s.b[i])) b.clear();
        if (is_zero(ring, s.c[i])) c.clear();
        lifted.b.push_back(std::move(b));
        lifted.c.push_back(std::move(c));
    }
    return lifted;
}

/// Dense monic characteristic polynomial, ascending-degree coefficients,
/// degree exactly n.
template <Ring R>
typename poly_ring<R>::elem charpoly(const R& ring, const ktoeplitz_spec<typename R::elem>& s) {
    poly_ring<R> P(ring);
    return det_auto(P, charpoly_spec(ring, s));
}

template <typename Elem>
struct eigencheck_result {
    Elem p_value;                  // p(lambda)
    std::optional<Elem> witness;   // nonzero z with z * p(lambda) = 0, when one exists
    bool is_eigenvalue() const { return witness.has_value(); }
};

/// Spec with diagonal lambda - a_i; the off-diagonals keep their entries
/// (their pairwise products are what the determinants consume).
template <Ring R>
ktoeplitz_spec<typename R::elem> lambda_shifted_spec(const R& ring,
                                                     const ktoeplitz_spec<typename R::elem>& s,
                                                     const typename R::elem& lambda) {
    ktoeplitz_spec<typename R::elem> sh = s;
    for (std::size_t i = 0; i < s.k; ++i) sh.a[i] = ring.sub(lambda, s.a[i]);
    return sh;
}

/// Evaluates p(lambda) as a plain determinant (no polynomial ring needed)
/// and samples an annihilator witness.
template <AnnihilatorRing R>
eigencheck_result<typename R::elem> eigencheck(const R& ring,
                                               const ktoeplitz_spec<typename R::elem>& s,
                                               const typename R::elem& lambda) {
    validate_spec(s);
    auto p = det_auto(ring, lambda_shifted_spec(ring, s, lambda));
    return {p, ring.annihilator_sample(p)};
}

namespace detail {

template <Ring R>
void check_eigen_witness(const R& ring, const typename R::elem& z, const typename R::elem& p) {
    if (is_zero(ring, z)) throw std::invalid_argument("eigvec: witness z must be nonzero");
    if (!is_zero(ring, ring.mul(z, p)))
        throw std::invalid_argument("eigvec: z does not annihilate p(lambda)");
}

}  // namespace detail

/**
 * Eigenvector candidate v with v_i = z * b_i..b_{n-1} * D(i-1) over the
 * lambda-shifted spec, via one pass of leading principal determinants plus
 * one running product. Returns nothing when every component is zero (the
 * construction carries no guarantee of nontriviality). Rejects z = 0 and
 * witnesses that fail to annihilate p(lambda).
 */
template <Ring R>
std::optional<std::vector<typename R::elem>> eigvec_v(const R& ring,
                                                      const ktoeplitz_spec<typename R::elem>& s,
                                                      const typename R::elem& lambda,
                                                      const typename R::elem& z) {
    validate_spec(s);
    auto sh = lambda_shifted_spec(ring, s, lambda);
    auto D = det_d1_all(ring, sh);
    detail::check_eigen_witness(ring, z, D[s.n]);

    // chain[i] = z * b_{i+1} ... b_{n-1}, built from the tail
    std::vector<typename R::elem> chain(s.n, z);
    for (std::size_t i = s.n - 1; i-- > 0;)
        chain[i] = ring.mul(chain[i + 1], s.b[i % s.k]);

    std::vector<typename R::elem> v;
    v.reserve(s.n);
    v.push_back(chain[0]);  // D(0) = 1
    for (std::size_t i = 2; i <= s.n; ++i) v.push_back(ring.mul(chain[i - 1], D[i - 1]));

    for (const auto& x : v)
        if (!is_zero(ring, x)) return v;
    return std::nullopt;
}

/// Mirrored construction: w_i = z * c_1..c_{i-1} * D_i(n-i), via the
/// trailing determinants of the lambda-shifted spec.
template <Ring R>
std::optional<std::vector<typename R::elem>> eigvec_w(const R& ring,
                                                      const ktoeplitz_spec<typename R::elem>& s,
                                                      const typename R::elem& lambda,
                                                      const typename R::elem& z) {
    validate_spec(s);
    auto sh = lambda_shifted_spec(ring, s, lambda);
    auto D = det_d1_shifted_all(ring, sh);  // D[t] = det of trailing block of order n-t
    detail::check_eigen_witness(ring, z, D[0]);

    std::vector<typename R::elem> w;
    w.reserve(s.n);
    typename R::elem prefix = z;
    for (std::size_t i = 1; i <= s.n; ++i) {
        if (i > 1) prefix = ring.mul(prefix, s.c[(i - 2) % s.k]);
        w.push_back(i == s.n ? prefix : ring.mul(prefix, D[i]));
    }

    for (const auto& x : w)
        if (!is_zero(ring, x)) return w;
    return std::nullopt;
}

template <typename PolyElem>
struct charpoly_factors {
    PolyElem fib_factor;    // U_{m+1} at (pi, d) over K[x], degree n-k+1
    PolyElem alpha_factor;  // alpha(k-1, k) over K[x], degree k-1
};

/// When n = mk + k - 1, the characteristic polynomial splits as
/// fib_factor * alpha_factor; both factors are returned expanded.
template <Ring R>
charpoly_factors<typename poly_ring<R>::elem> charpoly_factored_special(
    const R& ring, const ktoeplitz_spec<typename R::elem>& s) {
    validate_spec(s);
    if (s.n % s.k != s.k - 1)
        throw std::invalid_argument("charpoly_factored_special: requires n = mk + k - 1");
    poly_ring<R> P(ring);
    auto lifted = charpoly_spec(ring, s);
    auto d = offdiag_products(P, lifted);
    auto table = build_table(P, lifted.a, d);
    auto pair = fib_pair_dnc(P, table.pi, table.d, static_cast<std::uint64_t>(s.n / s.k) + 1);
    return {pair.u, table.alpha[s.k - 1]};
}

}  // namespace ktz
