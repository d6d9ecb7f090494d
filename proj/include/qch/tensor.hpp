/**
 * @file tensor.hpp
 * @brief Sparse operators and cotensors on k legs of dimension N, generic over
 *        a coefficient ring.
 *
 * Multi-indices have k components in 1..N and are encoded row-major (first leg
 * most significant) into a single integer key, which fixes a canonical entry
 * order for serialization. No zero entries are ever stored.
 */
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "qch/ring.hpp"

namespace qch {

using Index = std::uint32_t;
using MultiIndex = std::vector<int>;  // components in 1..N

inline Index encode_index(const MultiIndex& mi, int dim) {
    Index code = 0;
    for (int x : mi) {
        if (x < 1 || x > dim) throw std::invalid_argument("encode_index: component out of range");
        code = code * Index(dim) + Index(x - 1);
    }
    return code;
}

inline MultiIndex decode_index(Index code, int dim, int legs) {
    MultiIndex mi(legs);
    for (int t = legs - 1; t >= 0; --t) {
        mi[t] = int(code % Index(dim)) + 1;
        code /= Index(dim);
    }
    return mi;
}

inline Index index_space_size(int dim, int legs) {
    Index s = 1;
    for (int t = 0; t < legs; ++t) s *= Index(dim);
    return s;
}

template <class R>
class CoTensor;

/// Sparse linear operator on `legs` tensor legs of dimension `dim`.
template <class R>
class TensorOp {
public:
    using Key = std::pair<Index, Index>;
    using EntryMap = std::map<Key, R>;

    TensorOp(int dim, int legs) : dim_(dim), legs_(legs) {
        if (dim < 1 || legs < 0) throw std::invalid_argument("TensorOp: bad shape");
    }

    static TensorOp identity(int dim, int legs, const R& one) {
        TensorOp op(dim, legs);
        Index n = index_space_size(dim, legs);
        for (Index i = 0; i < n; ++i) op.e_.emplace(Key{i, i}, one);
        return op;
    }
    static TensorOp identity(int dim, int legs) { return identity(dim, legs, RingOps<R>::one()); }

    int dim() const { return dim_; }
    int legs() const { return legs_; }
    const EntryMap& entries() const { return e_; }
    bool is_zero() const { return e_.empty(); }

    void add_entry(Index row, Index col, const R& value) {
        if (RingOps<R>::is_zero(value)) return;
        auto [it, inserted] = e_.emplace(Key{row, col}, value);
        if (!inserted) {
            it->second = it->second + value;
            if (RingOps<R>::is_zero(it->second)) e_.erase(it);
        }
    }
    void add_entry(const MultiIndex& row, const MultiIndex& col, const R& value) {
        add_entry(encode_index(row, dim_), encode_index(col, dim_), value);
    }
    R entry(const MultiIndex& row, const MultiIndex& col) const {
        auto it = e_.find(Key{encode_index(row, dim_), encode_index(col, dim_)});
        return it == e_.end() ? RingOps<R>::zero() : it->second;
    }

    bool same_shape(const TensorOp& o) const { return dim_ == o.dim_ && legs_ == o.legs_; }

    friend bool operator==(const TensorOp& a, const TensorOp& b) {
        return a.dim_ == b.dim_ && a.legs_ == b.legs_ && a.e_ == b.e_;
    }
    friend bool operator!=(const TensorOp& a, const TensorOp& b) { return !(a == b); }

    friend TensorOp operator+(const TensorOp& a, const TensorOp& b) {
        if (!a.same_shape(b)) throw std::invalid_argument("TensorOp+: shape mismatch");
        TensorOp r = a;
        for (const auto& [k, v] : b.e_) r.add_entry(k.first, k.second, v);
        return r;
    }
    friend TensorOp operator-(const TensorOp& a, const TensorOp& b) {
        if (!a.same_shape(b)) throw std::invalid_argument("TensorOp-: shape mismatch");
        TensorOp r = a;
        for (const auto& [k, v] : b.e_) r.add_entry(k.first, k.second, -v);
        return r;
    }

    /// c * op (coefficient on the left of every entry)
    TensorOp scaled_left(const R& c) const {
        TensorOp r(dim_, legs_);
        for (const auto& [k, v] : e_) r.add_entry(k.first, k.second, c * v);
        return r;
    }
    /// op * c (coefficient on the right of every entry)
    TensorOp scaled_right(const R& c) const {
        TensorOp r(dim_, legs_);
        for (const auto& [k, v] : e_) r.add_entry(k.first, k.second, v * c);
        return r;
    }

    template <class R2, class F>
    TensorOp<R2> map_coeffs(F&& f) const {
        TensorOp<R2> r(dim_, legs_);
        for (const auto& [k, v] : e_) r.add_entry(k.first, k.second, f(v));
        return r;
    }

private:
    int dim_;
    int legs_;
    EntryMap e_;

    template <class R2>
    friend class TensorOp;
};

/// Rank-k cotensor (row vector over multi-indices), e.g. the epsilon tensor.
template <class R>
class CoTensor {
public:
    using EntryMap = std::map<Index, R>;

    CoTensor(int dim, int legs) : dim_(dim), legs_(legs) {
        if (dim < 1 || legs < 0) throw std::invalid_argument("CoTensor: bad shape");
    }

    int dim() const { return dim_; }
    int legs() const { return legs_; }
    const EntryMap& entries() const { return e_; }
    bool is_zero() const { return e_.empty(); }

    void add_entry(Index idx, const R& value) {
        if (RingOps<R>::is_zero(value)) return;
        auto [it, inserted] = e_.emplace(idx, value);
        if (!inserted) {
            it->second = it->second + value;
            if (RingOps<R>::is_zero(it->second)) e_.erase(it);
        }
    }
    void add_entry(const MultiIndex& mi, const R& value) { add_entry(encode_index(mi, dim_), value); }
    R entry(const MultiIndex& mi) const {
        auto it = e_.find(encode_index(mi, dim_));
        return it == e_.end() ? RingOps<R>::zero() : it->second;
    }

    bool same_shape(const CoTensor& o) const { return dim_ == o.dim_ && legs_ == o.legs_; }

    friend bool operator==(const CoTensor& a, const CoTensor& b) {
        return a.dim_ == b.dim_ && a.legs_ == b.legs_ && a.e_ == b.e_;
    }
    friend bool operator!=(const CoTensor& a, const CoTensor& b) { return !(a == b); }

    friend CoTensor operator+(const CoTensor& a, const CoTensor& b) {
        if (!a.same_shape(b)) throw std::invalid_argument("CoTensor+: shape mismatch");
        CoTensor r = a;
        for (const auto& [k, v] : b.e_) r.add_entry(k, v);
        return r;
    }
    friend CoTensor operator-(const CoTensor& a, const CoTensor& b) {
        if (!a.same_shape(b)) throw std::invalid_argument("CoTensor-: shape mismatch");
        CoTensor r = a;
        for (const auto& [k, v] : b.e_) r.add_entry(k, -v);
        return r;
    }
    CoTensor scaled_left(const R& c) const {
        CoTensor r(dim_, legs_);
        for (const auto& [k, v] : e_) r.add_entry(k, c * v);
        return r;
    }
    CoTensor scaled_right(const R& c) const {
        CoTensor r(dim_, legs_);
        for (const auto& [k, v] : e_) r.add_entry(k, v * c);
        return r;
    }

    template <class R2, class F>
    CoTensor<R2> map_coeffs(F&& f) const {
        CoTensor<R2> r(dim_, legs_);
        for (const auto& [k, v] : e_) r.add_entry(k, f(v));
        return r;
    }

private:
    int dim_;
    int legs_;
    EntryMap e_;

    template <class R2>
    friend class CoTensor;
};

/// Matrix product over multi-indices; noncommutative coefficients multiply in
/// operand order (entry of a times entry of b).
template <class R>
TensorOp<R> compose(const TensorOp<R>& a, const TensorOp<R>& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("compose: shape mismatch");
    // group b's entries by row for sparse lookup
    std::map<Index, std::vector<std::pair<Index, const R*>>> b_by_row;
    for (const auto& [k, v] : b.entries()) b_by_row[k.first].emplace_back(k.second, &v);
    TensorOp<R> r(a.dim(), a.legs());
    for (const auto& [ka, va] : a.entries()) {
        auto it = b_by_row.find(ka.second);
        if (it == b_by_row.end()) continue;
        for (const auto& [cb, vb] : it->second) r.add_entry(ka.first, cb, va * (*vb));
    }
    return r;
}

/**
 * Place an m-leg operator at leg positions [start, start+m-1] (1-based) of a
 * total-leg space, acting as the identity elsewhere.
 */
template <class R>
TensorOp<R> embed(const TensorOp<R>& op, int start, int total) {
    int m = op.legs();
    if (start < 1 || start + m - 1 > total)
        throw std::invalid_argument("embed: leg range [" + std::to_string(start) + ", " +
                                    std::to_string(start + m - 1) + "] outside 1.." +
                                    std::to_string(total));
    int dim = op.dim();
    int before = start - 1;
    int after = total - before - m;
    Index n_before = index_space_size(dim, before);
    Index n_after = index_space_size(dim, after);
    Index n_m = index_space_size(dim, m);
    TensorOp<R> r(dim, total);
    for (const auto& [k, v] : op.entries()) {
        for (Index u = 0; u < n_before; ++u) {
            for (Index w = 0; w < n_after; ++w) {
                Index row = (u * n_m + k.first) * n_after + w;
                Index col = (u * n_m + k.second) * n_after + w;
                r.add_entry(row, col, v);
            }
        }
    }
    return r;
}

/// (vA)_J = sum_I v_I A^I_J, coefficient products in that order
template <class R>
CoTensor<R> contract_left(const CoTensor<R>& v, const TensorOp<R>& op) {
    if (v.dim() != op.dim() || v.legs() != op.legs())
        throw std::invalid_argument("contract_left: shape mismatch");
    std::map<Index, std::vector<std::pair<Index, const R*>>> op_by_row;
    for (const auto& [k, c] : op.entries()) op_by_row[k.first].emplace_back(k.second, &c);
    CoTensor<R> r(v.dim(), v.legs());
    for (const auto& [i, c] : v.entries()) {
        auto it = op_by_row.find(i);
        if (it == op_by_row.end()) continue;
        for (const auto& [j, a] : it->second) r.add_entry(j, c * (*a));
    }
    return r;
}

/// (Av)_I = sum_J A^I_J v_J, coefficient products in that order
template <class R>
CoTensor<R> contract_right(const TensorOp<R>& op, const CoTensor<R>& v) {
    if (v.dim() != op.dim() || v.legs() != op.legs())
        throw std::invalid_argument("contract_right: shape mismatch");
    CoTensor<R> r(v.dim(), v.legs());
    for (const auto& [k, a] : op.entries()) {
        auto it = v.entries().find(k.second);
        if (it == v.entries().end()) continue;
        r.add_entry(k.first, a * it->second);
    }
    return r;
}

/// sum_I u_I v_I
template <class R>
R full_pairing(const CoTensor<R>& u, const CoTensor<R>& v) {
    if (!u.same_shape(v)) throw std::invalid_argument("full_pairing: shape mismatch");
    R acc = RingOps<R>::zero();
    const auto& ue = u.entries();
    const auto& ve = v.entries();
    for (const auto& [i, cu] : ue) {
        auto it = ve.find(i);
        if (it != ve.end()) acc = acc + cu * it->second;
    }
    return acc;
}

/**
 * Gram tensor over the open legs: G^{A,B} = sum_C u^{A,C} v^{B,C}, where C runs
 * over the `shared` leg positions (1-based) and A, B over the remaining legs in
 * order. All legs shared reduces to full_pairing; none shared is the outer
 * product.
 */
template <class R>
TensorOp<R> partial_pairing(const CoTensor<R>& u, const CoTensor<R>& v,
                            const std::vector<int>& shared) {
    if (!u.same_shape(v)) throw std::invalid_argument("partial_pairing: shape mismatch");
    int legs = u.legs();
    int dim = u.dim();
    std::vector<bool> is_shared(legs + 1, false);
    for (int s : shared) {
        if (s < 1 || s > legs) throw std::invalid_argument("partial_pairing: invalid leg set");
        if (is_shared[s]) throw std::invalid_argument("partial_pairing: duplicate shared leg");
        is_shared[s] = true;
    }
    int open = legs - int(shared.size());

    auto split = [&](Index code) {
        MultiIndex mi = decode_index(code, dim, legs);
        Index a = 0, c = 0;
        for (int t = 0; t < legs; ++t) {
            if (is_shared[t + 1])
                c = c * Index(dim) + Index(mi[t] - 1);
            else
                a = a * Index(dim) + Index(mi[t] - 1);
        }
        return std::pair<Index, Index>{a, c};
    };

    std::map<Index, std::vector<std::pair<Index, const R*>>> u_by_shared, v_by_shared;
    for (const auto& [i, c] : u.entries()) {
        auto [a, s] = split(i);
        u_by_shared[s].emplace_back(a, &c);
    }
    for (const auto& [i, c] : v.entries()) {
        auto [b, s] = split(i);
        v_by_shared[s].emplace_back(b, &c);
    }

    TensorOp<R> g(dim, open);
    for (const auto& [s, us] : u_by_shared) {
        auto it = v_by_shared.find(s);
        if (it == v_by_shared.end()) continue;
        for (const auto& [a, cu] : us)
            for (const auto& [b, cv] : it->second) g.add_entry(a, b, (*cu) * (*cv));
    }
    return g;
}

/// sum_{A,B} G^{A,B} M^A_B -- pairing of a Gram tensor against an operator
template <class R>
R gram_apply(const TensorOp<R>& g, const TensorOp<R>& m) {
    if (!g.same_shape(m)) throw std::invalid_argument("gram_apply: shape mismatch");
    R acc = RingOps<R>::zero();
    const auto& me = m.entries();
    for (const auto& [k, cg] : g.entries()) {
        auto it = me.find(k);
        if (it != me.end()) acc = acc + cg * it->second;
    }
    return acc;
}

}  // namespace qch
