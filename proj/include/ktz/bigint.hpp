#pragma once

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "ring.hpp"

namespace ktz {

/// Arbitrary-precision integers. Determinants grow multiplicatively with the
/// matrix order, so fixed-width variants are not offered; exactness wins.
class bigint_ring {
public:
    using elem = boost::multiprecision::cpp_int;

    elem zero() const { return elem(0); }
    elem one() const { return elem(1); }

    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem neg(const elem& a) const { return -a; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    bool eq(const elem& a, const elem& b) const { return a == b; }

    elem from_int(std::int64_t n) const { return elem(n); }

    /// Only +1 and -1 are units of Z.
    std::optional<elem> try_invert(const elem& a) const {
        if (a == 1 || a == -1) return a;
        return std::nullopt;
    }

    std::optional<elem> divide(const elem& a, const elem& b) const {
        auto inv = try_invert(b);
        if (!inv) return std::nullopt;
        return a * *inv;
    }

    /// Z is a domain: only 0 has a nonzero annihilator (everything, pick 1).
    std::optional<elem> annihilator_sample(const elem& a) const {
        if (a == 0) return elem(1);
        return std::nullopt;
    }
};

}  // namespace ktz
