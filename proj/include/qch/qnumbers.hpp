/**
 * @file qnumbers.hpp
 * @brief q-numbers p_q = (q^p - q^-p)/(q - 1/q), q-factorials and q-binomials.
 */
#pragma once

#include "qch/ratfunc.hpp"

namespace qch {

/// p_q = (q^p - q^-p)/(q - q^-1), computed by exact division; qnum(-p) = -qnum(p)
inline LaurentPoly qnum(long p) {
    if (p == 0) return LaurentPoly::zero();
    LaurentPoly numer = LaurentPoly::q_power(int(p)) - LaurentPoly::q_power(int(-p));
    return LaurentPoly::div_exact(numer, LaurentPoly::lambda());
}

/// p_q! = prod_{k=1..p} k_q; qfact(0) = 1
inline LaurentPoly qfact(long p) {
    if (p < 0) throw std::invalid_argument("qfact: negative argument");
    LaurentPoly r = LaurentPoly::one();
    for (long k = 1; k <= p; ++k) r *= qnum(k);
    return r;
}

/// Gaussian binomial n_q!/(k_q! (n-k)_q!) as a Laurent polynomial
inline LaurentPoly qbinom_poly(long n, long k) {
    if (k < 0 || k > n)
        throw std::invalid_argument("qbinom: require 0 <= k <= n, got n=" + std::to_string(n) +
                                    " k=" + std::to_string(k));
    return LaurentPoly::div_exact(qfact(n), qfact(k) * qfact(n - k));
}

inline RatFunc qbinom(long n, long k) { return RatFunc(qbinom_poly(n, k)); }

}  // namespace qch
