/**
 * @file qstruct.hpp
 * @brief GL_q(N) structure constants: the braiding R-hat, the q-deformed
 *        Levi-Civita tensor, the quantum-trace matrix D.
 *
 * RHat::build enforces the Yang-Baxter equation, the Hecke condition and the
 * epsilon-tensor invariants (both contraction sides, normalization, norm) at
 * construction. A failure means a convention bug and throws.
 */
#pragma once

#include <numeric>

#include "qch/linalg.hpp"
#include "qch/qnumbers.hpp"
#include "qch/tensor.hpp"

namespace qch {

namespace detail {

/// R-hat entries: q on (ii,ii); 1 on (ji,ij) for i != j; lambda on (ij,ij) for i < j
inline TensorOp<LaurentPoly> rhat_entries(int N) {
    TensorOp<LaurentPoly> op(N, 2);
    LaurentPoly lam = LaurentPoly::lambda();
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            if (i == j) {
                op.add_entry(MultiIndex{i, i}, MultiIndex{i, i}, LaurentPoly::q_power(1));
            } else {
                op.add_entry(MultiIndex{j, i}, MultiIndex{i, j}, LaurentPoly::one());
                if (i < j) op.add_entry(MultiIndex{i, j}, MultiIndex{i, j}, lam);
            }
        }
    }
    return op;
}

inline int inversion_count(const MultiIndex& mi) {
    int inv = 0;
    for (size_t a = 0; a < mi.size(); ++a)
        for (size_t b = a + 1; b < mi.size(); ++b)
            if (mi[a] > mi[b]) ++inv;
    return inv;
}

}  // namespace detail

/// diag(q^{-N+1}, q^{-N+3}, ..., q^{N-1}); trace equals N_q
class DMatrix {
public:
    explicit DMatrix(int N) : N_(N) {
        if (N < 1) throw std::invalid_argument("DMatrix: N >= 1 required");
        LaurentPoly trace;
        for (int a = 1; a <= N; ++a) {
            d_.push_back(LaurentPoly::q_power(2 * a - N - 1));
            trace += d_.back();
        }
        if (trace != qnum(N)) throw std::logic_error("DMatrix: trace is not N_q");
    }

    int N() const { return N_; }
    /// diagonal entry for index a in 1..N
    const LaurentPoly& at(int a) const { return d_.at(size_t(a - 1)); }
    const std::vector<LaurentPoly>& diagonal() const { return d_; }

private:
    int N_;
    std::vector<LaurentPoly> d_;
};

/// rank-N q-antisymmetric tensor, entry (-q)^{inversions} on permutations
class EpsilonTensor {
public:
    static EpsilonTensor closed_form(int N) {
        CoTensor<LaurentPoly> v(N, N);
        auto perm = MultiIndex(size_t(N));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            int inv = detail::inversion_count(perm);
            Int c = (inv % 2 == 0) ? Int(1) : Int(-1);
            v.add_entry(perm, LaurentPoly::monomial(c, inv));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return EpsilonTensor(N, std::move(v));
    }

    int N() const { return N_; }
    const CoTensor<LaurentPoly>& tensor() const { return v_; }

    LaurentPoly self_pairing() const { return full_pairing(v_, v_); }

    /// expected |eps|^2 = q^{N(N-1)/2} N_q!
    static LaurentPoly norm_formula(int N) {
        return LaurentPoly::q_power(N * (N - 1) / 2) * qfact(N);
    }

private:
    EpsilonTensor(int N, CoTensor<LaurentPoly> v) : N_(N), v_(std::move(v)) {}
    int N_;
    CoTensor<LaurentPoly> v_;

    friend class RHat;
};

/// GL_q(N) braiding on two legs, validated against all axioms at construction
class RHat {
public:
    static RHat build(int N) {
        if (N < 1) throw std::invalid_argument("RHat: N >= 1 required");
        RHat rh(N, detail::rhat_entries(N));
        rh.check_axioms_();
        return rh;
    }

    int N() const { return N_; }
    const TensorOp<LaurentPoly>& op() const { return op_; }

    /// R-hat inverse = R-hat - lambda (consequence of the Hecke condition)
    TensorOp<LaurentPoly> inverse_op() const {
        return op_ - TensorOp<LaurentPoly>::identity(N_, 2).scaled_left(LaurentPoly::lambda());
    }

    /// R_i + 1/q embedded on `total` legs (the epsilon annihilator)
    TensorOp<LaurentPoly> annihilator(int i, int total) const {
        return embed(op_, i, total) +
               TensorOp<LaurentPoly>::identity(N_, total).scaled_left(LaurentPoly::q_power(-1));
    }

    /// q-symmetric projector P_+ = (R-hat + 1/q)/2_q, over the fraction field
    TensorOp<RatFunc> p_plus() const {
        RatFunc inv2q = RatFunc::one() / RatFunc(qnum(2));
        auto lifted = op_.map_coeffs<RatFunc>([](const LaurentPoly& c) { return RatFunc(c); });
        auto shifted =
            lifted + TensorOp<RatFunc>::identity(N_, 2).scaled_left(RatFunc::q_power(-1));
        return shifted.scaled_left(inv2q);
    }

private:
    RHat(int N, TensorOp<LaurentPoly> op) : N_(N), op_(std::move(op)) {}

    int N_;
    TensorOp<LaurentPoly> op_;

    void check_axioms_() const {
        // Hecke: R^2 = 1 + lambda R
        auto rsq = compose(op_, op_);
        auto hecke = TensorOp<LaurentPoly>::identity(N_, 2) + op_.scaled_left(LaurentPoly::lambda());
        if (rsq != hecke) throw std::logic_error("RHat: Hecke condition failed");
        // Yang-Baxter: R1 R2 R1 = R2 R1 R2 on three legs
        if (N_ >= 1) {
            auto r1 = embed(op_, 1, 3);
            auto r2 = embed(op_, 2, 3);
            if (compose(compose(r1, r2), r1) != compose(compose(r2, r1), r2))
                throw std::logic_error("RHat: Yang-Baxter equation failed");
        }
        // epsilon invariants
        EpsilonTensor eps = EpsilonTensor::closed_form(N_);
        auto id_perm = MultiIndex(size_t(N_));
        std::iota(id_perm.begin(), id_perm.end(), 1);
        if (!eps.tensor().entry(id_perm).is_one())
            throw std::logic_error("RHat: epsilon normalization entry is not 1");
        for (int i = 1; i <= N_ - 1; ++i) {
            auto ann = annihilator(i, N_);
            if (!contract_left(eps.tensor(), ann).is_zero())
                throw std::logic_error("RHat: left epsilon eigenrelation failed at i=" +
                                       std::to_string(i));
            if (!contract_right(ann, eps.tensor()).is_zero())
                throw std::logic_error("RHat: right epsilon eigenrelation failed at i=" +
                                       std::to_string(i));
        }
        if (eps.self_pairing() != EpsilonTensor::norm_formula(N_))
            throw std::logic_error("RHat: epsilon norm mismatch");
    }
};

/// joint kernel of {R_i + 1/q} on rank-N cotensors, by exact elimination over
/// the fraction field; asserts the kernel is one-dimensional
inline EpsilonTensor solve_eps(const RHat& rh) {
    int N = rh.N();
    Index slots = index_space_size(N, N);
    std::vector<SparseRow<RatFunc>> rows;
    for (int i = 1; i <= N - 1; ++i) {
        auto ann = rh.annihilator(i, N);
        // one equation per operator column J: sum_I v_I ann^I_J = 0
        std::map<Index, SparseRow<RatFunc>> by_col;
        for (const auto& [k, c] : ann.entries()) by_col[k.second][int(k.first)] = RatFunc(c);
        for (auto& [col, row] : by_col) rows.push_back(std::move(row));
    }
    auto basis = kernel_basis(rows, int(slots), PivotPolicy::shortest_row);
    if (basis.size() != 1)
        throw std::logic_error("solve_eps: kernel dimension is " + std::to_string(basis.size()) +
                               ", expected 1");
    auto id_perm = MultiIndex(size_t(N));
    std::iota(id_perm.begin(), id_perm.end(), 1);
    int anchor = int(encode_index(id_perm, N));
    auto it = basis[0].find(anchor);
    if (it == basis[0].end() || it->second.is_zero())
        throw std::logic_error("solve_eps: kernel vector vanishes at (1..N)");
    RatFunc scale = RatFunc::one() / it->second;
    CoTensor<LaurentPoly> v(N, N);
    for (const auto& [idx, c] : basis[0]) {
        RatFunc val = c * scale;
        if (!val.is_poly())
            throw std::logic_error("solve_eps: non-polynomial entry after normalization");
        v.add_entry(Index(idx), val.as_poly());
    }
    EpsilonTensor closed = EpsilonTensor::closed_form(N);
    if (v != closed.tensor())
        throw std::logic_error("solve_eps: kernel disagrees with the closed form");
    return closed;
}

/// kernel dimension of the epsilon system without normalization (diagnostic)
inline int eps_kernel_dimension(const RHat& rh) {
    int N = rh.N();
    Index slots = index_space_size(N, N);
    std::vector<SparseRow<RatFunc>> rows;
    for (int i = 1; i <= N - 1; ++i) {
        auto ann = rh.annihilator(i, N);
        std::map<Index, SparseRow<RatFunc>> by_col;
        for (const auto& [k, c] : ann.entries()) by_col[k.second][int(k.first)] = RatFunc(c);
        for (auto& [col, row] : by_col) rows.push_back(std::move(row));
    }
    return int(kernel_basis(rows, int(slots), PivotPolicy::shortest_row).size());
}

/// Tr_q(X) = sum_i D_i X^i_i for a one-leg operator; coefficients D_i are
/// lifted into the operator's ring by `lift`
template <class R, class F>
R qtrace(const TensorOp<R>& x, const DMatrix& d, F&& lift) {
    if (x.legs() != 1 || x.dim() != d.N()) throw std::invalid_argument("qtrace: shape mismatch");
    R acc = RingOps<R>::zero();
    for (const auto& [k, v] : x.entries()) {
        if (k.first != k.second) continue;
        acc = acc + lift(d.at(int(k.first) + 1)) * v;
    }
    return acc;
}

/// quantum trace over a single leg: contracts D into leg j only
template <class R, class F>
TensorOp<R> qtrace_leg(const TensorOp<R>& x, int leg, const DMatrix& d, F&& lift) {
    if (leg < 1 || leg > x.legs()) throw std::invalid_argument("qtrace_leg: bad leg");
    if (x.dim() != d.N()) throw std::invalid_argument("qtrace_leg: dimension mismatch");
    TensorOp<R> r(x.dim(), x.legs() - 1);
    for (const auto& [k, v] : x.entries()) {
        MultiIndex row = decode_index(k.first, x.dim(), x.legs());
        MultiIndex col = decode_index(k.second, x.dim(), x.legs());
        if (row[leg - 1] != col[leg - 1]) continue;
        int a = row[leg - 1];
        row.erase(row.begin() + (leg - 1));
        col.erase(col.begin() + (leg - 1));
        r.add_entry(encode_index(row, x.dim()), encode_index(col, x.dim()), lift(d.at(a)) * v);
    }
    return r;
}

}  // namespace qch
