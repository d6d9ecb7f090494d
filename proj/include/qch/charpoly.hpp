/**
 * @file charpoly.hpp
 * @brief Central elements s_q(i), sigma_q(i), the symmetrizer S_N, the quantum
 *        characteristic polynomial in two forms, the B matrix, and the
 *        verification routines for the quantum Newton relations, the
 *        Cayley-Hamilton identity, the inverse formula and higher traces.
 *
 * Everything is verified as an exact identity: residuals are normal-formed
 * noncommutative polynomials that must vanish. Polynomials in the scalar
 * variable x are coefficient lists over NCPoly (x commutes with everything).
 */
#pragma once

#include "qch/rea.hpp"

namespace qch {

/// polynomial in x with operator coefficients
using XOp = std::vector<TensorOp<NCPoly>>;
/// polynomial in x with NCPoly coefficients
using XScalar = std::vector<NCPoly>;

inline XOp xop_mul(const XOp& a, const XOp& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("xop_mul: empty operand");
    TensorOp<NCPoly> z(a[0].dim(), a[0].legs());
    XOp r(a.size() + b.size() - 1, z);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + compose(a[i], b[j]);
    return r;
}

/// normalizing constants of the sigma_q construction, with the closed form
/// checked against the recursion and the alpha_1 anchor
struct AlphaTable {
    int N;
    std::vector<RatFunc> alpha;  // alpha[i] for i = 1..N, index 0 unused

    const RatFunc& at(int i) const { return alpha.at(size_t(i)); }
};

inline AlphaTable alpha_table(int N) {
    if (N < 1) throw std::invalid_argument("alpha_table: N >= 1 required");
    RatFunc norm2(EpsilonTensor::norm_formula(N));  // |eps|^2
    AlphaTable t{N, std::vector<RatFunc>(size_t(N) + 1)};
    for (int i = 1; i <= N; ++i) {
        t.alpha[size_t(i)] =
            RatFunc(qbinom_poly(N, i) * LaurentPoly::q_power(-i * (N - i))) / norm2;
    }
    // anchor: alpha_1 = q^{1-N} N_q / |eps|^2
    RatFunc anchor = RatFunc(qnum(N) * LaurentPoly::q_power(1 - N)) / norm2;
    if (t.alpha[1] != anchor) throw std::logic_error("alpha_table: alpha_1 anchor failed");
    // recursion: alpha_p = q^{2p-1-N} (N-p+1)_q / p_q * alpha_{p-1}
    for (int p = 2; p <= N; ++p) {
        RatFunc step = RatFunc(qnum(N - p + 1) * LaurentPoly::q_power(2 * p - 1 - N)) /
                       RatFunc(qnum(p));
        if (t.alpha[size_t(p)] != step * t.alpha[size_t(p) - 1])
            throw std::logic_error("alpha_table: recursion failed at p=" + std::to_string(p));
    }
    return t;
}

struct CentralElement {
    char kind;  // 's' or 'o' (sigma)
    int index;
    NCPoly value;  // in normal form; centrality asserted at construction
};

/**
 * Verification engine for one GL_q(N). Owns the checked structure constants,
 * the rewrite system and caches of central elements and L powers.
 */
class CharPolyEngine {
public:
    explicit CharPolyEngine(int N)
        : N_(N),
          rhat_(RHat::build(N)),
          eps_(EpsilonTensor::closed_form(N)),
          dmat_(N),
          rs_(RewriteSystem::build(rhat_)),
          alpha_(alpha_table(N)),
          rhat_nc_(lift_to_nc(rhat_.op())),
          eps_nc_(lift_to_nc(eps_.tensor())) {}

    int N() const { return N_; }
    const RHat& rhat() const { return rhat_; }
    const EpsilonTensor& eps() const { return eps_; }
    const DMatrix& dmat() const { return dmat_; }
    const RewriteSystem& rewrite() const { return rs_; }
    const AlphaTable& alphas() const { return alpha_; }
    const RatFunc& alpha(int i) const { return alpha_.at(i); }

    /// s_q(i) = q^{1-N} Tr_q L^i, normal-formed; s_q(0) = q^{1-N} N_q.
    /// Centrality is asserted for the generating range i <= N; the extended
    /// traces i > N reuse the same formula.
    const NCPoly& s_q(int i) {
        if (i < 0) throw std::invalid_argument("s_q: i >= 0 required");
        auto it = s_cache_.find(i);
        if (it != s_cache_.end()) return it->second;
        NCPoly val;
        if (i == 0) {
            val = NCPoly::scalar(RatFunc(qnum(N_) * LaurentPoly::q_power(1 - N_)));
        } else {
            const NCMatrix& li = l_power(i);
            NCPoly acc;
            for (int a = 1; a <= N_; ++a)
                acc += li.at(a, a).scaled(RatFunc(dmat_.at(a)));
            val = rs_.normal_form(acc.scaled(RatFunc::q_power(1 - N_)));
            if (i <= N_) assert_central_(val, "s_q(" + std::to_string(i) + ")");
        }
        return s_cache_.emplace(i, std::move(val)).first->second;
    }

    /// sigma_q(i) = alpha_i eps (L1 R_1...R_{i-1})^i eps, normal-formed;
    /// sigma_q(0) = 1
    const NCPoly& sigma_q(int i) {
        if (i < 0 || i > N_)
            throw std::invalid_argument("sigma_q: 0 <= i <= N required, got " + std::to_string(i));
        auto it = sigma_cache_.find(i);
        if (it != sigma_cache_.end()) return it->second;
        NCPoly val;
        if (i == 0) {
            val = NCPoly::one();
        } else {
            auto m = compose(l_matrix_leg1(N_, i), rchain_(1, i - 1, i));
            TensorOp<NCPoly> mi = m;
            for (int k = 1; k < i; ++k) mi = compose(mi, m);
            auto gram = partial_pairing(eps_nc_, eps_nc_, shared_legs_(i + 1));
            NCPoly raw = gram_apply(gram, mi);
            val = rs_.normal_form(raw.scaled(alpha_.at(i)));
            assert_central_(val, "sigma_q(" + std::to_string(i) + ")");
        }
        return sigma_cache_.emplace(i, std::move(val)).first->second;
    }

    CentralElement central_element(char kind, int i) {
        if (kind == 's') return {kind, i, s_q(i)};
        if (kind == 'o') return {kind, i, sigma_q(i)};
        throw std::invalid_argument("central_element: kind must be 's' or 'o'");
    }

    /// S_N(X) = X_1 + R_1 X_1 R_1 + ... + R_{N-1}...R_1 X_1 R_1...R_{N-1}
    TensorOp<NCPoly> symmetrize(const TensorOp<NCPoly>& x) const {
        if (x.legs() != 1 || x.dim() != N_)
            throw std::invalid_argument("symmetrize: expected a one-leg operator");
        TensorOp<NCPoly> term = embed(x, 1, N_);
        TensorOp<NCPoly> sum = term;
        for (int k = 1; k <= N_ - 1; ++k) {
            auto rk = embed(rhat_nc_, k, N_);
            term = compose(compose(rk, term), rk);
            sum = sum + term;
        }
        return sum;
    }

    /// L^i as a one-leg operator
    TensorOp<NCPoly> l_power_op(int i, int legs) {
        const NCMatrix& li = l_power(i);
        TensorOp<NCPoly> op(N_, 1);
        for (int a = 1; a <= N_; ++a)
            for (int b = 1; b <= N_; ++b) op.add_entry(MultiIndex{a}, MultiIndex{b}, li.at(a, b));
        return embed(op, 1, legs);
    }

    /**
     * Quantum Newton relation residual, expected zero:
     * (i_q / q^{i-1}) sigma_q(i) + sum_{k=1}^{i} (-1)^k s_q(k) sigma_q(i-k).
     */
    NCPoly newton_residual(int i) {
        if (i < 1 || i > N_) throw std::invalid_argument("newton_residual: 1 <= i <= N");
        NCPoly acc = sigma_q(i).scaled(RatFunc(qnum(i)) / RatFunc::q_power(i - 1));
        for (int k = 1; k <= i; ++k) {
            NCPoly term = s_q(k) * sigma_q(i - k);
            if (k % 2 == 1)
                acc -= term;
            else
                acc += term;
        }
        return rs_.normal_form(acc);
    }

    struct TelescopeCheck {
        NCPoly lhs;  // nf(s_q(i-p) sigma_q(p))
        NCPoly rhs;  // the two-bracket expansion from the Proposition's proof
        bool equal = false;
    };

    /**
     * Term-by-term engine of the Proposition's proof, for 1 <= p <= i-1:
     * s_q(i-p) sigma_q(p) = alpha_p p_q/q^{p-1} [eps (L^{i-p+1} R_1..R_{p-1})
     * (L R_1..R_{p-1})^{p-1} eps] + alpha_p (N-p)_q/q^{N-p-1} [eps
     * (L^{i-p} R_1..R_p)(L R_1..R_p)^p eps].
     */
    TelescopeCheck telescope_check(int i, int p) {
        if (!(1 <= p && p <= i - 1 && i <= N_))
            throw std::invalid_argument("telescope_check: need 1 <= p <= i-1, i <= N");
        TelescopeCheck out;
        out.lhs = rs_.normal_form(s_q(i - p) * sigma_q(p));

        // first bracket lives on legs 1..p
        NCPoly t1;
        {
            auto head = compose(l_power_op(i - p + 1, p), rchain_(1, p - 1, p));
            auto step = compose(l_matrix_leg1(N_, p), rchain_(1, p - 1, p));
            TensorOp<NCPoly> op = head;
            for (int k = 0; k < p - 1; ++k) op = compose(op, step);
            t1 = gram_apply(partial_pairing(eps_nc_, eps_nc_, shared_legs_(p + 1)), op);
        }
        // second bracket lives on legs 1..p+1
        NCPoly t2;
        {
            auto head = compose(l_power_op(i - p, p + 1), rchain_(1, p, p + 1));
            auto step = compose(l_matrix_leg1(N_, p + 1), rchain_(1, p, p + 1));
            TensorOp<NCPoly> op = head;
            for (int k = 0; k < p; ++k) op = compose(op, step);
            t2 = gram_apply(partial_pairing(eps_nc_, eps_nc_, shared_legs_(p + 2)), op);
        }
        RatFunc c1 = alpha_.at(p) * RatFunc(qnum(p)) / RatFunc::q_power(p - 1);
        RatFunc c2 = alpha_.at(p) * RatFunc(qnum(N_ - p)) / RatFunc::q_power(N_ - p - 1);
        out.rhs = rs_.normal_form(t1.scaled(c1) + t2.scaled(c2));
        out.equal = (out.lhs == out.rhs);
        return out;
    }

    struct CharPolyForms {
        XScalar sigma_form;    // coefficient of x^k is (-1)^k sigma_q(N-k)
        XScalar product_form;  // from the eps-contracted product, normal-formed
        bool equal = false;
    };

    /// the characteristic polynomial both ways; the coefficient-wise equality
    /// mechanically discharges the simplification between the two expressions
    CharPolyForms charpoly_two_ways() {
        CharPolyForms out;
        out.sigma_form = sigma_form_();
        // (1/|eps|^2) eps prod_{i=0}^{N-1} [(L - q^{2i} x) R_1...R_{N-1}] eps
        auto rch = rchain_(1, N_ - 1, N_);
        XOp prod{TensorOp<NCPoly>::identity(N_, N_)};
        for (int i = 0; i < N_; ++i) prod = xop_mul(prod, x_factor_(2 * i, rch));
        RatFunc inv_norm = RatFunc::one() / RatFunc(EpsilonTensor::norm_formula(N_));
        out.product_form.resize(prod.size());
        for (size_t k = 0; k < prod.size(); ++k)
            out.product_form[k] = rs_.normal_form(eps_sandwich_(prod[k]).scaled(inv_norm));
        out.equal = (out.sigma_form == out.product_form);
        return out;
    }

    struct BMatrixCheck {
        bool holds = true;
        int first_bad_power = -1;
        std::string witness;  // canonical text of the first nonzero residual entry
    };

    /**
     * Eq. (L - x) B(L,x) eps = eps Delta(x), coefficient-wise in x.
     * shift_exponent = 2 is the theorem; 3 is the negative control that must
     * fail at N = 2 (the q^2 shift is forced).
     */
    BMatrixCheck bmatrix_check(int shift_exponent = 2) {
        auto rch = rchain_(1, N_ - 1, N_);
        XOp b{rch};
        for (int i = 1; i <= N_ - 1; ++i) b = xop_mul(b, x_factor_(shift_exponent * i, rch));
        XOp lfac(2, TensorOp<NCPoly>(N_, N_));
        lfac[0] = l_power_op(1, N_);
        lfac[1] = TensorOp<NCPoly>(N_, N_) -
                  TensorOp<NCPoly>::identity(N_, N_);  // coefficient of x is -1
        XOp lhs = xop_mul(lfac, b);

        XScalar delta = sigma_form_();
        BMatrixCheck out;
        for (size_t k = 0; k < lhs.size(); ++k) {
            CoTensor<NCPoly> got = contract_right(lhs[k], eps_nc_);
            CoTensor<NCPoly> want =
                (k < delta.size()) ? eps_nc_.scaled_right(delta[k]) : CoTensor<NCPoly>(N_, N_);
            CoTensor<NCPoly> diff = got - want;
            CoTensor<NCPoly> residual(N_, N_);
            for (const auto& [idx, p] : diff.entries()) residual.add_entry(idx, rs_.normal_form(p));
            if (!residual.is_zero()) {
                out.holds = false;
                out.first_bad_power = int(k);
                const auto& [idx, p] = *residual.entries().begin();
                out.witness = "x^" + std::to_string(k) + " residual at index " +
                              index_text_(idx) + ": " + p.text(N_);
                return out;
            }
        }
        return out;
    }

    /**
     * Delta(L) = sum_{i=0}^{N} (-1)^i L^i sigma_q(N-i), entries normal-formed.
     * sigma_on_right selects L^i sigma vs sigma L^i; both must vanish.
     */
    NCMatrix cayley_hamilton_residual(bool sigma_on_right = true) {
        NCMatrix acc(N_);
        for (int i = 0; i <= N_; ++i) {
            const NCPoly& s = sigma_q(N_ - i);
            NCMatrix term = sigma_on_right ? l_power(i).scaled_right(s) : l_power(i).scaled_left(s);
            if (i % 2 == 0)
                acc = acc + term;
            else
                acc = acc - term;
        }
        return acc.normal_formed(rs_);
    }

    struct InverseCheck {
        NCMatrix left_residual;   // nf(L adj - sigma_q(N) 1)
        NCMatrix right_residual;  // nf(adj L - sigma_q(N) 1)
        bool holds = false;
    };

    /// multiplicative form of the inverse formula: L adj = adj L = sigma_q(N) 1
    /// with adj = sum_{i=0}^{N-1} (-1)^i L^i sigma_q(N-1-i)
    InverseCheck inverse_check() {
        NCMatrix adj(N_);
        for (int i = 0; i <= N_ - 1; ++i) {
            NCMatrix term = l_power(i).scaled_right(sigma_q(N_ - 1 - i));
            if (i % 2 == 0)
                adj = adj + term;
            else
                adj = adj - term;
        }
        const NCMatrix& l = l_power(1);
        NCMatrix rhs = NCMatrix::identity(N_).scaled_left(sigma_q(N_));
        InverseCheck out{(l * adj - rhs).normal_formed(rs_), (adj * l - rhs).normal_formed(rs_)};
        out.holds = out.left_residual.is_zero() && out.right_residual.is_zero();
        return out;
    }

    /// residual of sum_{i=0}^{N} (-1)^i s_q(i+p) sigma_q(N-i), expected zero;
    /// rearranged, this expresses s_q(N+p) through lower traces
    NCPoly higher_trace_residual(int p) {
        if (p < 1) throw std::invalid_argument("higher_trace_residual: p >= 1");
        NCPoly acc;
        for (int i = 0; i <= N_; ++i) {
            NCPoly term = s_q(i + p) * sigma_q(N_ - i);
            if (i % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        return rs_.normal_form(acc);
    }

    /// Det L = q^{1-N} sigma_q(N); the SL_q(N) specialization is the quotient
    /// by Det L = 1 (reported, never imposed)
    NCPoly det_L() { return rs_.normal_form(sigma_q(N_).scaled(RatFunc::q_power(1 - N_))); }

    /// eps X eps as a scalar NCPoly (full contraction on both sides)
    NCPoly eps_sandwich(const TensorOp<NCPoly>& op) const { return eps_sandwich_(op); }

    /// R_1...R_{k} chain on `legs` legs, identity when k < 1
    TensorOp<NCPoly> rchain(int k, int legs) const { return rchain_(1, k, legs); }

    const NCMatrix& l_power(int i) {
        auto it = lpow_cache_.find(i);
        if (it != lpow_cache_.end()) return it->second;
        NCMatrix m = (i == 0) ? NCMatrix::identity(N_)
                              : l_power(i - 1) * NCMatrix::generators(N_);
        return lpow_cache_.emplace(i, std::move(m)).first->second;
    }

private:
    int N_;
    RHat rhat_;
    EpsilonTensor eps_;
    DMatrix dmat_;
    RewriteSystem rs_;
    AlphaTable alpha_;
    TensorOp<NCPoly> rhat_nc_;
    CoTensor<NCPoly> eps_nc_;
    std::map<int, NCPoly> s_cache_, sigma_cache_;
    std::map<int, NCMatrix> lpow_cache_;

    void assert_central_(const NCPoly& p, const std::string& name) {
        auto res = rs_.is_central(p);
        if (!res.central)
            throw std::logic_error(name + " is not central: [p, " +
                                   gen_text(res.offender, N_) + "] = " + res.residual.text(N_));
    }

    std::vector<int> shared_legs_(int from) const {
        std::vector<int> legs;
        for (int t = from; t <= N_; ++t) legs.push_back(t);
        return legs;
    }

    TensorOp<NCPoly> rchain_(int from, int to, int legs) const {
        TensorOp<NCPoly> r = TensorOp<NCPoly>::identity(N_, legs);
        for (int k = from; k <= to; ++k) r = compose(r, embed(rhat_nc_, k, legs));
        return r;
    }

    /// (L - q^e x) R_1...R_{N-1} as a degree-1 polynomial in x
    XOp x_factor_(int e, const TensorOp<NCPoly>& rch) const {
        XOp f(2, TensorOp<NCPoly>(N_, N_));
        TensorOp<NCPoly> l1(N_, 1);
        for (int a = 1; a <= N_; ++a)
            for (int c = 1; c <= N_; ++c)
                l1.add_entry(MultiIndex{a}, MultiIndex{c}, NCPoly::generator(gen_code(a, c, N_)));
        f[0] = compose(embed(l1, 1, N_), rch);
        f[1] = rch.scaled_left(NCPoly::scalar(-RatFunc::q_power(e)));
        return f;
    }

    XScalar sigma_form_() {
        XScalar delta(size_t(N_) + 1);
        for (int k = 0; k <= N_; ++k) {
            delta[size_t(k)] = (k % 2 == 0) ? sigma_q(N_ - k) : -sigma_q(N_ - k);
        }
        return delta;
    }

    NCPoly eps_sandwich_(const TensorOp<NCPoly>& op) const {
        return full_pairing(contract_left(eps_nc_, op), eps_nc_);
    }

    std::string index_text_(Index idx) const {
        MultiIndex mi = decode_index(idx, N_, N_);
        std::string s = "(";
        for (size_t t = 0; t < mi.size(); ++t) s += (t ? "," : "") + std::to_string(mi[t]);
        return s + ")";
    }
};

}  // namespace qch
