#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace ktz {

/**
 * Dense univariate polynomials over any ring. Coefficients are stored in
 * ascending degree with no trailing zero coefficient; the zero polynomial is
 * the empty sequence. Degrees stay small here (at most a few hundred), so
 * schoolbook multiplication is fine.
 */
template <Ring R>
class poly_ring {
public:
    using coeff = typename R::elem;
    using elem = std::vector<coeff>;

    explicit poly_ring(R base) : base_(std::move(base)) {}

    const R& coeff_ring() const { return base_; }

    elem zero() const { return {}; }
    elem one() const { return {base_.one()}; }

    elem from_int(std::int64_t n) const {
        coeff c = base_.from_int(n);
        if (base_.eq(c, base_.zero())) return {};
        return {c};
    }

    elem add(const elem& a, const elem& b) const {
        elem r(std::max(a.size(), b.size()), base_.zero());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = base_.add(r[i], b[i]);
        normalize(r);
        return r;
    }

    elem sub(const elem& a, const elem& b) const {
        elem r(std::max(a.size(), b.size()), base_.zero());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = base_.sub(r[i], b[i]);
        normalize(r);
        return r;
    }

    elem neg(const elem& a) const {
        elem r = a;
        for (auto& c : r) c = base_.neg(c);
        return r;
    }

    elem mul(const elem& a, const elem& b) const {
        if (a.empty() || b.empty()) return {};
        elem r(a.size() + b.size() - 1, base_.zero());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = base_.add(r[i + j], base_.mul(a[i], b[j]));
        normalize(r);
        return r;
    }

    bool eq(const elem& a, const elem& b) const {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!base_.eq(a[i], b[i])) return false;
        return true;
    }

    /// Units are the unit constants of the coefficient ring.
    std::optional<elem> try_invert(const elem& a) const
        requires InvertibleRing<R>
    {
        if (a.size() != 1) return std::nullopt;
        auto inv = base_.try_invert(a[0]);
        if (!inv) return std::nullopt;
        return elem{*inv};
    }

    std::optional<elem> divide(const elem& a, const elem& b) const
        requires InvertibleRing<R>
    {
        auto inv = try_invert(b);
        if (!inv) return std::nullopt;
        return mul(a, *inv);
    }

    /// Strips trailing zero coefficients in place.
    void normalize(elem& v) const {
        while (!v.empty() && base_.eq(v.back(), base_.zero())) v.pop_back();
    }

private:
    R base_;
};

/// Degree of p, with deg 0 = -1 by the empty-sequence convention.
template <Ring R>
long poly_degree(const poly_ring<R>&, const typename poly_ring<R>::elem& p) {
    return static_cast<long>(p.size()) - 1;
}

/// Builds a polynomial from ascending-degree coefficients, normalizing.
template <Ring R>
typename poly_ring<R>::elem make_poly(const poly_ring<R>& P,
                                      std::vector<typename R::elem> ascending) {
    P.normalize(ascending);
    return ascending;
}

/// Horner evaluation over the coefficient ring.
template <Ring R>
typename R::elem poly_eval(const poly_ring<R>& P, const typename poly_ring<R>::elem& p,
                           const typename R::elem& x) {
    const R& K = P.coeff_ring();
    typename R::elem acc = K.zero();
    for (std::size_t i = p.size(); i-- > 0;) acc = K.add(K.mul(acc, x), p[i]);
    return acc;
}

}  // namespace ktz
