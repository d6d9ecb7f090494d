/**
 * @file ratfunc.hpp
 * @brief Reduced fractions of Laurent polynomials in q.
 *
 * Canonical form: gcd(num, den) is a unit, den is an ordinary polynomial in q
 * (lowest exponent 0, nonzero constant term) with positive leading coefficient.
 * Two RatFunc are equal iff their fields are identical.
 */
#pragma once

#include "qch/laurent.hpp"

namespace qch {

class RatFunc {
public:
    RatFunc() = default;
    RatFunc(long n) : num_(n) {}
    RatFunc(const Int& n) : num_(n) {}
    RatFunc(LaurentPoly p) : num_(std::move(p)) {}
    RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        reduce_();
    }

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    /// q^exp as a rational function
    static RatFunc q_power(int exp) { return RatFunc(LaurentPoly::q_power(exp)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// true if the denominator is 1, i.e. the value is a Laurent polynomial
    bool is_poly() const { return den_.is_one(); }

    /// the Laurent polynomial value; throws if den != 1
    const LaurentPoly& as_poly() const {
        if (!is_poly()) throw std::domain_error("RatFunc::as_poly: denominator is not 1");
        return num_;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    friend bool operator<(const RatFunc& a, const RatFunc& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    /**
     * Exact evaluation at q0. Throws std::domain_error naming the vanishing
     * denominator when q0 is a forbidden specialization (e.g. a root of unity
     * killing some k_q).
     */
    Rat eval(const Rat& q0) const {
        Rat d = den_.eval(q0);
        if (d == 0)
            throw std::domain_error("RatFunc::eval: denominator (" + den_.text() +
                                    ") vanishes at q0 = " + Rat(q0).get_str());
        Rat n = num_.eval(q0);
        Rat r = n / d;
        r.canonicalize();
        return r;
    }

    /// canonical text: Laurent form when den = 1, otherwise "(num)/(den)"
    std::string text() const {
        if (is_poly()) return num_.text();
        return "(" + num_.text() + ")/(" + den_.text() + ")";
    }

    static RatFunc parse(const std::string& s) {
        if (!s.empty() && s.front() == '(') {
            size_t mid = s.find(")/(");
            if (mid == std::string::npos || s.back() != ')')
                throw std::invalid_argument("RatFunc::parse: bad fraction '" + s + "'");
            return RatFunc(LaurentPoly::parse(s.substr(1, mid - 1)),
                           LaurentPoly::parse(s.substr(mid + 3, s.size() - mid - 4)));
        }
        return RatFunc(LaurentPoly::parse(s));
    }

private:
    LaurentPoly num_;
    LaurentPoly den_ = LaurentPoly::one();

    void reduce_() {
        if (num_.is_zero()) {
            den_ = LaurentPoly::one();
            return;
        }
        LaurentPoly g = LaurentPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = LaurentPoly::div_exact(num_, g);
            den_ = LaurentPoly::div_exact(den_, g);
        }
        // den becomes an ordinary polynomial with nonzero constant term
        int k = den_.low();
        if (k != 0) {
            den_ = den_.shifted(-k);
            num_ = num_.shifted(-k);
        }
        if (den_.lead() < 0) {
            den_ = -den_;
            num_ = -num_;
        }
    }
};

}  // namespace qch
