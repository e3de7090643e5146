#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ring.hpp"

namespace ktz {

/**
 * A tridiagonal k-Toeplitz matrix, given by its order n and the three period
 * seeds: a (main diagonal), b (upper diagonal), c (lower diagonal), each of
 * length k and extended periodically. The matrix itself is never
 * materialized here; see oracle.hpp for the dense reference form.
 */
template <typename Elem>
struct ktoeplitz_spec {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Elem> a;
    std::vector<Elem> b;
    std::vector<Elem> c;

    /// Quotient and remainder of n by k: m full periods plus a tail of r.
    std::size_t quotient() const { return n / k; }
    std::size_t remainder() const { return n % k; }
};

template <typename Elem>
void validate_spec(const ktoeplitz_spec<Elem>& s) {
    if (s.n < 1) throw std::invalid_argument("ktoeplitz_spec: order n must be >= 1");
    if (s.k < 1) throw std::invalid_argument("ktoeplitz_spec: period k must be >= 1");
    if (s.a.size() != s.k || s.b.size() != s.k || s.c.size() != s.k)
        throw std::invalid_argument("ktoeplitz_spec: seed vectors must have length k");
}

/// The transpose swaps the upper and lower diagonals; the determinant is
/// unchanged.
template <typename Elem>
ktoeplitz_spec<Elem> transposed(const ktoeplitz_spec<Elem>& s) {
    return {s.n, s.k, s.a, s.c, s.b};
}

/// Off-diagonal products d_i = b_i * c_i, one multiplication per period slot.
template <Ring R>
std::vector<typename R::elem> offdiag_products(const R& ring,
                                               const ktoeplitz_spec<typename R::elem>& s) {
    std::vector<typename R::elem> d;
    d.reserve(s.k);
    for (std::size_t i = 0; i < s.k; ++i) d.push_back(ring.mul(s.b[i], s.c[i]));
    return d;
}

/// Cyclic left rotation sigma_s of a period seed; costs no ring operations.
template <typename Elem>
std::vector<Elem> rotated_seed(const std::vector<Elem>& v, std::size_t s) {
    const std::size_t k = v.size();
    std::vector<Elem> r;
    r.reserve(k);
    for (std::size_t i = 0; i < k; ++i) r.push_back(v[(s + i) % k]);
    return r;
}

}  // namespace ktz
