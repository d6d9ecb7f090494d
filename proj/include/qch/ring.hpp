/**
 * @file ring.hpp
 * @brief Coefficient-ring protocol used by the tensor engine.
 *
 * A ring type must provide +, -, *, unary -, ==, and a RingOps specialization.
 * Noncommutative rings set commutative = false; the tensor engine never swaps
 * factor order, so such rings are safe coefficient types.
 */
#pragma once

#include <gmpxx.h>

#include "qch/laurent.hpp"
#include "qch/ratfunc.hpp"

namespace qch {

template <class R>
struct RingOps;

template <>
struct RingOps<LaurentPoly> {
    static constexpr bool commutative = true;
    static LaurentPoly zero() { return LaurentPoly::zero(); }
    static LaurentPoly one() { return LaurentPoly::one(); }
    static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
};

template <>
struct RingOps<RatFunc> {
    static constexpr bool commutative = true;
    static RatFunc zero() { return RatFunc::zero(); }
    static RatFunc one() { return RatFunc::one(); }
    static bool is_zero(const RatFunc& x) { return x.is_zero(); }
};

template <>
struct RingOps<Rat> {
    static constexpr bool commutative = true;
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& x) { return x == 0; }
};

}  // namespace qch
