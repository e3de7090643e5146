#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "ring.hpp"

namespace ktz {

/// Z/MZ with canonical representatives in [0, M). Requires 2 <= M < 2^63 so
/// that addition never overflows and products fit in 128 bits.
class zmod_ring {
public:
    using elem = std::uint64_t;

    explicit zmod_ring(std::uint64_t modulus) : m_(modulus) {
        if (modulus < 2) throw std::invalid_argument("zmod_ring: modulus must be >= 2");
        if (modulus >> 63) throw std::invalid_argument("zmod_ring: modulus must fit in 63 bits");
    }

    std::uint64_t modulus() const { return m_; }

    elem zero() const { return 0; }
    elem one() const { return 1; }

    elem add(elem a, elem b) const {
        elem s = a + b;
        return s >= m_ ? s - m_ : s;
    }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + (m_ - b); }
    elem neg(elem a) const { return a == 0 ? 0 : m_ - a; }
    elem mul(elem a, elem b) const {
        return static_cast<elem>(static_cast<unsigned __int128>(a) * b % m_);
    }
    bool eq(elem a, elem b) const { return a == b; }

    elem from_int(std::int64_t n) const {
        std::int64_t r = n % static_cast<std::int64_t>(m_);
        if (r < 0) r += static_cast<std::int64_t>(m_);
        return static_cast<elem>(r);
    }

    /// Extended-gcd inverse; empty when gcd(a, M) > 1.
    std::optional<elem> try_invert(elem a) const {
        __int128 t = 0, nt = 1;
        std::uint64_t r = m_, nr = a;
        while (nr != 0) {
            std::uint64_t q = r / nr;
            __int128 t2 = t - static_cast<__int128>(q) * nt;
            t = nt;
            nt = t2;
            std::uint64_t r2 = r - q * nr;
            r = nr;
            nr = r2;
        }
        if (r != 1) return std::nullopt;
        if (t < 0) t += m_;
        return static_cast<elem>(t);
    }

    std::optional<elem> divide(elem a, elem b) const {
        auto inv = try_invert(b);
        if (!inv) return std::nullopt;
        return mul(a, *inv);
    }

    /// Nonzero z with z*a = 0 when a is a zero divisor: z = M / gcd(a, M).
    /// Covers a = 0 (gcd is M, so z = 1); units get an empty result.
    std::optional<elem> annihilator_sample(elem a) const {
        std::uint64_t g = std::gcd(a, m_);
        if (g <= 1) return std::nullopt;
        return m_ / g;
    }

private:
    std::uint64_t m_;
};

}  // namespace ktz
