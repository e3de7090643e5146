#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force reference implementations, desk scale only.
 *
 * Everything here is deliberately independent of the recurrence-based
 * production code: determinants come from cofactor expansion, inverses from
 * the adjugate, matrix powers from repeated naive products. Agreement with
 * the fast paths is evidence, not tautology. Hard size caps keep runtimes
 * bounded.
 */

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ktoeplitz.hpp"
#include "ring.hpp"

namespace ktz {

template <typename Elem>
struct dense_matrix {
    std::size_t n = 0;
    std::vector<Elem> e;  // row-major, n*n

    Elem& at(std::size_t i, std::size_t j) { return e[(i - 1) * n + (j - 1)]; }
    const Elem& at(std::size_t i, std::size_t j) const { return e[(i - 1) * n + (j - 1)]; }
};

/// Lays out the three periodic diagonals densely, zeros elsewhere.
template <Ring R>
dense_matrix<typename R::elem> dense_materialize(const R& ring,
                                                 const ktoeplitz_spec<typename R::elem>& s) {
    validate_spec(s);
    dense_matrix<typename R::elem> M{s.n, std::vector<typename R::elem>(s.n * s.n, ring.zero())};
    for (std::size_t i = 1; i <= s.n; ++i) M.at(i, i) = s.a[(i - 1) % s.k];
    for (std::size_t i = 1; i + 1 <= s.n; ++i) {
        M.at(i, i + 1) = s.b[(i - 1) % s.k];
        M.at(i + 1, i) = s.c[(i - 1) % s.k];
    }
    return M;
}

namespace detail {

template <Ring R>
typename R::elem det_expand(const R& ring, const dense_matrix<typename R::elem>& M) {
    if (M.n == 1) return M.at(1, 1);
    typename R::elem acc = ring.zero();
    for (std::size_t j = 1; j <= M.n; ++j) {
        if (is_zero(ring, M.at(1, j))) continue;  // sparse rows keep this tractable
        dense_matrix<typename R::elem> minor{M.n - 1, {}};
        minor.e.reserve((M.n - 1) * (M.n - 1));
        for (std::size_t r = 2; r <= M.n; ++r)
            for (std::size_t c = 1; c <= M.n; ++c)
                if (c != j) minor.e.push_back(M.at(r, c));
        auto term = ring.mul(M.at(1, j), det_expand(ring, minor));
        acc = (j % 2 == 1) ? ring.add(acc, term) : ring.sub(acc, term);
    }
    return acc;
}

}  // namespace detail

/// Determinant by first-row cofactor expansion. Exponential; rejects n > 12.
template <Ring R>
typename R::elem det_laplace(const R& ring, const dense_matrix<typename R::elem>& M) {
    if (M.n < 1) throw std::invalid_argument("det_laplace: empty matrix");
    if (M.n > 12) throw std::invalid_argument("det_laplace: order capped at 12");
    return detail::det_expand(ring, M);
}

/// Adjugate (transposed cofactor matrix) plus the determinant, all by
/// cofactor expansion. M * adj = det * I in any commutative ring. n <= 8.
template <Ring R>
std::pair<dense_matrix<typename R::elem>, typename R::elem> adjugate_inverse(
    const R& ring, const dense_matrix<typename R::elem>& M) {
    if (M.n < 1) throw std::invalid_argument("adjugate_inverse: empty matrix");
    if (M.n > 8) throw std::invalid_argument("adjugate_inverse: order capped at 8");
    const std::size_t n = M.n;
    dense_matrix<typename R::elem> adj{n, std::vector<typename R::elem>(n * n, ring.zero())};
    if (n == 1) {
        adj.at(1, 1) = ring.one();
        return {adj, M.at(1, 1)};
    }
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t s = 1; s <= n; ++s) {
            dense_matrix<typename R::elem> minor{n - 1, {}};
            minor.e.reserve((n - 1) * (n - 1));
            for (std::size_t i = 1; i <= n; ++i) {
                if (i == s) continue;
                for (std::size_t j = 1; j <= n; ++j)
                    if (j != r) minor.e.push_back(M.at(i, j));
            }
            auto cof = detail::det_expand(ring, minor);
            adj.at(r, s) = ((r + s) % 2 == 0) ? cof : ring.neg(cof);
        }
    }
    return {adj, detail::det_expand(ring, M)};
}

template <Ring R>
std::vector<typename R::elem> matvec(const R& ring, const dense_matrix<typename R::elem>& M,
                                     const std::vector<typename R::elem>& v) {
    if (v.size() != M.n) throw std::invalid_argument("matvec: size mismatch");
    std::vector<typename R::elem> out;
    out.reserve(M.n);
    for (std::size_t i = 1; i <= M.n; ++i) {
        typename R::elem acc = ring.zero();
        for (std::size_t j = 1; j <= M.n; ++j) acc = ring.add(acc, ring.mul(M.at(i, j), v[j - 1]));
        out.push_back(acc);
    }
    return out;
}

template <typename Elem>
struct naive_mat2 {
    Elem e11, e12, e21, e22;
};

/// m-fold naive product of a 2x2 matrix, m >= 1.
template <Ring R>
naive_mat2<typename R::elem> mat_power_naive(const R& ring, const naive_mat2<typename R::elem>& A,
                                             std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("mat_power_naive: exponent must be >= 1");
    naive_mat2<typename R::elem> acc = A;
    for (std::uint64_t i = 1; i < m; ++i) {
        naive_mat2<typename R::elem> next{
            ring.add(ring.mul(acc.e11, A.e11), ring.mul(acc.e12, A.e21)),
            ring.add(ring.mul(acc.e11, A.e12), ring.mul(acc.e12, A.e22)),
            ring.add(ring.mul(acc.e21, A.e11), ring.mul(acc.e22, A.e21)),
            ring.add(ring.mul(acc.e21, A.e12), ring.mul(acc.e22, A.e22))};
        acc = next;
    }
    return acc;
}

/**
 * Determinant of a block-triangular matrix as the product of its diagonal
 * block determinants. The partition is a list of diagonal block sizes; it is
 * rejected unless the matrix really is block lower or upper triangular with
 * respect to it.
 */
template <Ring R>
typename R::elem block_det_check(const R& ring, const dense_matrix<typename R::elem>& M,
                                 const std::vector<std::size_t>& partition) {
    std::size_t total = 0;
    for (auto s : partition) {
        if (s == 0) throw std::invalid_argument("block_det_check: empty block");
        total += s;
    }
    if (partition.empty() || total != M.n)
        throw std::invalid_argument("block_det_check: partition does not cover the matrix");

    std::vector<std::size_t> start{1};
    for (auto s : partition) start.push_back(start.back() + s);

    auto zero_outside = [&](bool upper_part) {
        for (std::size_t bi = 0; bi + 1 < start.size(); ++bi)
            for (std::size_t bj = 0; bj + 1 < start.size(); ++bj) {
                bool off = upper_part ? bi < bj : bi > bj;
                if (!off) continue;
                for (std::size_t i = start[bi]; i < start[bi + 1]; ++i)
                    for (std::size_t j = start[bj]; j < start[bj + 1]; ++j)
                        if (!is_zero(ring, M.at(i, j))) return false;
            }
        return true;
    };
    if (!zero_outside(true) && !zero_outside(false))
        throw std::invalid_argument("block_det_check: matrix is not block triangular for this partition");

    typename R::elem acc = ring.one();
    for (std::size_t bi = 0; bi + 1 < start.size(); ++bi) {
        std::size_t sz = partition[bi];
        dense_matrix<typename R::elem> blk{sz, {}};
        blk.e.reserve(sz * sz);
        for (std::size_t i = start[bi]; i < start[bi] + sz; ++i)
            for (std::size_t j = start[bi]; j < start[bi] + sz; ++j) blk.e.push_back(M.at(i, j));
        acc = ring.mul(acc, det_laplace(ring, blk));
    }
    return acc;
}

}  // namespace ktz
