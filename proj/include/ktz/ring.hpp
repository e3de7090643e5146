#pragma once

/**
 * @file ring.hpp
 * @brief Commutative-ring abstraction, operation tally, counting wrapper.
 *
 * All algorithms in this library are written against the Ring concept below:
 * elements are plain values and every arithmetic step goes through the ring
 * object, so a counting wrapper can interpose and measure the exact number
 * of elementary operations an algorithm performs.
 */

#include <bit>
#include <concepts>
#include <cstdint>
#include <optional>

namespace ktz {

/// Tally of elementary ring operations. Integer bookkeeping (binary
/// expansions of exponents, parity tests) is tracked separately in int_ops,
/// so ring costs and index-arithmetic costs can be reported side by side.
/// Equality tests and copies are free; negation is charged as a subtraction.
struct op_count {
    std::uint64_t adds = 0;
    std::uint64_t subs = 0;
    std::uint64_t muls = 0;
    std::uint64_t divs = 0;
    std::uint64_t int_ops = 0;

    /// Ring operations only; int_ops are reported separately.
    std::uint64_t ring_total() const { return adds + subs + muls + divs; }

    void reset() { *this = op_count{}; }
};

/// Commutative unital ring with value-semantics elements.
template <typename R>
concept Ring =
    std::copyable<typename R::elem> &&
    requires(const R r, const typename R::elem& a, const typename R::elem& b, std::int64_t n) {
        { r.zero() } -> std::same_as<typename R::elem>;
        { r.one() } -> std::same_as<typename R::elem>;
        { r.add(a, b) } -> std::same_as<typename R::elem>;
        { r.sub(a, b) } -> std::same_as<typename R::elem>;
        { r.neg(a) } -> std::same_as<typename R::elem>;
        { r.mul(a, b) } -> std::same_as<typename R::elem>;
        { r.eq(a, b) } -> std::same_as<bool>;
        { r.from_int(n) } -> std::same_as<typename R::elem>;
    };

/// Rings that can decide invertibility and divide by units.
template <typename R>
concept InvertibleRing =
    Ring<R> && requires(const R r, const typename R::elem& a, const typename R::elem& b) {
        { r.try_invert(a) } -> std::same_as<std::optional<typename R::elem>>;
        { r.divide(a, b) } -> std::same_as<std::optional<typename R::elem>>;
    };

/// Rings that can produce a nonzero annihilator witness for zero divisors.
template <typename R>
concept AnnihilatorRing = Ring<R> && requires(const R r, const typename R::elem& a) {
    { r.annihilator_sample(a) } -> std::same_as<std::optional<typename R::elem>>;
};

template <Ring R>
bool is_zero(const R& ring, const typename R::elem& a) {
    return ring.eq(a, ring.zero());
}

template <Ring R>
bool is_one(const R& ring, const typename R::elem& a) {
    return ring.eq(a, ring.one());
}

/// Integer-bookkeeping hook. No-op unless the ring is a counting wrapper.
template <Ring R>
inline void int_tick(const R&, std::uint64_t = 1) {}

/**
 * Counting wrapper: delegates all arithmetic to the wrapped ring while
 * incrementing a shared tally. Wrapping changes no results, only the tally.
 *
 * Constants (zero, one, integer images) and equality tests are free.
 * try_invert/divide are charged as one division each. When the wrapped ring
 * is itself a polynomial ring, counting happens at whole-polynomial
 * granularity: one polynomial product is one operation.
 *
 * A wrapper borrows its base ring and tally; concurrent computations must
 * each use their own wrapper and tally.
 */
template <Ring R>
class counted_ring {
public:
    using elem = typename R::elem;

    counted_ring(const R& base, op_count& tally) : base_(&base), tally_(&tally) {}

    const R& base() const { return *base_; }
    op_count& tally() const { return *tally_; }

    elem zero() const { return base_->zero(); }
    elem one() const { return base_->one(); }
    elem from_int(std::int64_t n) const { return base_->from_int(n); }

    elem add(const elem& a, const elem& b) const {
        ++tally_->adds;
        return base_->add(a, b);
    }
    elem sub(const elem& a, const elem& b) const {
        ++tally_->subs;
        return base_->sub(a, b);
    }
    elem neg(const elem& a) const {
        ++tally_->subs;
        return base_->neg(a);
    }
    elem mul(const elem& a, const elem& b) const {
        ++tally_->muls;
        return base_->mul(a, b);
    }
    bool eq(const elem& a, const elem& b) const { return base_->eq(a, b); }

    std::optional<elem> try_invert(const elem& a) const
        requires InvertibleRing<R>
    {
        ++tally_->divs;
        return base_->try_invert(a);
    }
    std::optional<elem> divide(const elem& a, const elem& b) const
        requires InvertibleRing<R>
    {
        ++tally_->divs;
        return base_->divide(a, b);
    }
    std::optional<elem> annihilator_sample(const elem& a) const
        requires AnnihilatorRing<R>
    {
        return base_->annihilator_sample(a);
    }

private:
    const R* base_;
    op_count* tally_;
};

template <Ring R>
inline void int_tick(const counted_ring<R>& ring, std::uint64_t n = 1) {
    ring.tally().int_ops += n;
}

/// x^e by square-and-multiply over the binary expansion of e. At most
/// 2*floor(log2 e) multiplications and floor(log2 e) integer steps for
/// e >= 1; x^0 is one.
template <Ring R>
typename R::elem ring_power(const R& ring, const typename R::elem& x, std::uint64_t e) {
    if (e == 0) return ring.one();
    const int lead = std::bit_width(e) - 1;
    int_tick(ring, static_cast<std::uint64_t>(lead));
    typename R::elem acc = x;
    for (int i = lead - 1; i >= 0; --i) {
        acc = ring.mul(acc, acc);
        if ((e >> i) & 1u) acc = ring.mul(acc, x);
    }
    return acc;
}

}  // namespace ktz
