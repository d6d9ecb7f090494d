/**
 * @file laurent.hpp
 * @brief Laurent polynomials in q with arbitrary-precision integer coefficients.
 *
 * A LaurentPoly is a finite map exponent -> coefficient over GMP integers.
 * No zero coefficients are ever stored; equality is coefficient-wise.
 * All arithmetic is exact.
 */
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qch {

using Int = mpz_class;
using Rat = mpq_class;

class LaurentPoly {
public:
    using TermMap = std::map<int, Int>;

    LaurentPoly() = default;
    LaurentPoly(long n) { if (n != 0) c_[0] = Int(n); }
    LaurentPoly(const Int& n) { if (n != 0) c_[0] = n; }

    static LaurentPoly monomial(Int coeff, int exp) {
        LaurentPoly p;
        if (coeff != 0) p.c_[exp] = std::move(coeff);
        return p;
    }
    /// q^exp
    static LaurentPoly q_power(int exp) { return monomial(Int(1), exp); }
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }
    /// lambda = q - 1/q
    static LaurentPoly lambda() {
        LaurentPoly p;
        p.c_[1] = 1;
        p.c_[-1] = -1;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const {
        return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
    }
    /// true if a single term c*q^e
    bool is_monomial() const { return c_.size() == 1; }

    const TermMap& terms() const { return c_; }

    Int coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? Int(0) : it->second;
    }

    /// lowest exponent; polynomial must be nonzero
    int low() const {
        if (c_.empty()) throw std::domain_error("LaurentPoly::low: zero polynomial");
        return c_.begin()->first;
    }
    /// highest exponent; polynomial must be nonzero
    int high() const {
        if (c_.empty()) throw std::domain_error("LaurentPoly::high: zero polynomial");
        return c_.rbegin()->first;
    }
    /// coefficient of the highest exponent
    const Int& lead() const {
        if (c_.empty()) throw std::domain_error("LaurentPoly::lead: zero polynomial");
        return c_.rbegin()->second;
    }

    void add_term(int exp, const Int& coeff) {
        if (coeff == 0) return;
        Int& slot = c_[exp];
        slot += coeff;
        if (slot == 0) c_.erase(exp);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.c_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.c_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    /// total order (map comparison); used only for canonical sorting
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ < b.c_; }

    /// multiply by q^k
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_[e + k] = c;
        return r;
    }

    LaurentPoly pow(unsigned long n) const {
        LaurentPoly r = one();
        LaurentPoly base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    /// substitution q -> 1/q
    LaurentPoly subst_qinv() const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_[-e] = c;
        return r;
    }

    /// gcd of all integer coefficients, nonnegative; content(0) = 0
    Int content() const {
        Int g = 0;
        for (const auto& [e, c] : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    /// exact quotient a/b; throws std::domain_error if b is zero or does not divide a
    static LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw std::domain_error("LaurentPoly::div_exact: division by zero");
        if (a.is_zero()) return zero();
        // shift both to ordinary polynomials and long-divide over Z
        LaurentPoly rem = a.shifted(-a.low());
        LaurentPoly den = b.shifted(-b.low());
        int shift = a.low() - b.low();
        LaurentPoly quot;
        while (!rem.is_zero()) {
            int de = rem.high() - den.high();
            if (de < 0) throw std::domain_error("LaurentPoly::div_exact: not divisible");
            Int qc, rc;
            mpz_tdiv_qr(qc.get_mpz_t(), rc.get_mpz_t(), rem.lead().get_mpz_t(),
                        den.lead().get_mpz_t());
            if (rc != 0) throw std::domain_error("LaurentPoly::div_exact: not divisible");
            LaurentPoly t = monomial(qc, de);
            quot += t;
            rem -= t * den;
        }
        return quot.shifted(shift);
    }

    /**
     * gcd in Z[q, q^-1], canonically normalized: an ordinary polynomial with
     * lowest exponent 0 and positive leading coefficient; its integer content
     * equals gcd(content(a), content(b)). gcd(0, b) = normalized b.
     */
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return normalize_unit_(b);
        if (b.is_zero()) return normalize_unit_(a);
        Int cont;
        mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        LaurentPoly A = primitive_part_(a);
        LaurentPoly B = primitive_part_(b);
        // primitive PRS
        while (!B.is_zero()) {
            LaurentPoly R = prem_(A, B);
            A = B;
            B = primitive_part_(R);
        }
        A = primitive_part_(A);
        return A * LaurentPoly(cont);
    }

    /// exact evaluation at a nonzero rational point
    Rat eval(const Rat& q0) const {
        if (q0 == 0) throw std::domain_error("LaurentPoly::eval: q0 must be nonzero");
        Rat acc(0);
        Rat num(q0.get_num());
        Rat den(q0.get_den());
        for (const auto& [e, c] : c_) {
            Rat p(1);
            if (e >= 0) {
                for (int k = 0; k < e; ++k) p *= q0;
            } else {
                Rat inv = den / num;  // 1/q0
                for (int k = 0; k < -e; ++k) p *= inv;
            }
            acc += Rat(c) * p;
        }
        acc.canonicalize();
        return acc;
    }

    /// canonical text: terms by ascending exponent, e.g. "-1*q^-1 + 1*q^3"; zero is "0"
    std::string text() const {
        if (c_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : c_) {
            if (!first) s += " + ";
            s += c.get_str() + "*q^" + std::to_string(e);
            first = false;
        }
        return s;
    }

    /// parse the canonical text form; inverse of text()
    static LaurentPoly parse(const std::string& s) {
        LaurentPoly p;
        if (s == "0") return p;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t next = s.find(" + ", pos);
            std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
            size_t star = term.find("*q^");
            if (star == std::string::npos)
                throw std::invalid_argument("LaurentPoly::parse: bad term '" + term + "'");
            Int c(term.substr(0, star));
            int e = std::stoi(term.substr(star + 3));
            p.add_term(e, c);
            pos = (next == std::string::npos) ? s.size() : next + 3;
        }
        return p;
    }

private:
    TermMap c_;

    /// strip the unit factor (+-q^k) and content sign: ordinary, low exp 0, positive lead
    static LaurentPoly normalize_unit_(const LaurentPoly& p) {
        if (p.is_zero()) return p;
        LaurentPoly r = p.shifted(-p.low());
        if (r.lead() < 0) r = -r;
        return r;
    }

    static LaurentPoly primitive_part_(const LaurentPoly& p) {
        if (p.is_zero()) return p;
        LaurentPoly r = normalize_unit_(p);
        Int cont = r.content();
        if (cont > 1) r = div_exact(r, LaurentPoly(cont));
        return r;
    }

    /// pseudo-remainder of ordinary polynomials: lc(B)^(dA-dB+1) * A mod B
    static LaurentPoly prem_(LaurentPoly A, const LaurentPoly& B) {
        int dB = B.high();
        while (!A.is_zero() && A.high() >= dB) {
            int de = A.high() - dB;
            LaurentPoly t = monomial(A.lead(), de);
            A = A * LaurentPoly(B.lead()) - t * B;
        }
        return A;
    }
};

}  // namespace qch
