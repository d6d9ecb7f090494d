/**
 * @file rea.hpp
 * @brief The reflection equation algebra: generators l^i_j, noncommutative
 *        polynomials, the quadratic exchange relations L1 R L1 R = R L1 R L1,
 *        and the confluent normal-form rewrite system derived from them.
 *
 * Generators are totally ordered row-major; the monomial order on words is
 * degree-lex. Rewrite rules send each inversion g_a g_b (a > b) to a tail of
 * sorted degree-2 words, obtained by reduced row echelon elimination of the
 * relation span. PBW flatness (leading terms = all inversions) is asserted.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "qch/qstruct.hpp"

namespace qch {

using Gen = std::uint16_t;
using Word = std::vector<Gen>;

inline Gen gen_code(int row, int col, int N) { return Gen((row - 1) * N + (col - 1)); }
inline int gen_row(Gen g, int N) { return int(g) / N + 1; }
inline int gen_col(Gen g, int N) { return int(g) % N + 1; }
inline std::string gen_text(Gen g, int N) {
    return "l_" + std::to_string(gen_row(g, N)) + "_" + std::to_string(gen_col(g, N));
}

/// degree first, then lexicographic in the generator order
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (Gen g : w) {
            h ^= size_t(g) + 1;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Noncommutative polynomial in the REA generators over RatFunc coefficients.
class NCPoly {
public:
    using TermMap = std::map<Word, RatFunc, DegLexLess>;

    NCPoly() = default;

    static NCPoly scalar(RatFunc c) {
        NCPoly p;
        if (!c.is_zero()) p.t_.emplace(Word{}, std::move(c));
        return p;
    }
    static NCPoly one() { return scalar(RatFunc::one()); }
    static NCPoly monomial(Word w, RatFunc c) {
        NCPoly p;
        if (!c.is_zero()) p.t_.emplace(std::move(w), std::move(c));
        return p;
    }
    static NCPoly generator(Gen g) { return monomial(Word{g}, RatFunc::one()); }

    bool is_zero() const { return t_.empty(); }
    bool is_scalar() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    bool is_one() const {
        return t_.size() == 1 && t_.begin()->first.empty() && t_.begin()->second.is_one();
    }
    const TermMap& terms() const { return t_; }
    int degree() const { return t_.empty() ? -1 : int(t_.rbegin()->first.size()); }

    RatFunc coeff(const Word& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? RatFunc::zero() : it->second;
    }

    void add_term(const Word& w, const RatFunc& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o) {
        for (const auto& [w, c] : o.t_) add_term(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (const auto& [w, c] : o.t_) add_term(w, -c);
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    NCPoly operator-() const {
        NCPoly r;
        for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
        return r;
    }

    /// word concatenation; coefficients are central scalars and commute
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (const auto& [wa, ca] : a.t_) {
            for (const auto& [wb, cb] : b.t_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(w, ca * cb);
            }
        }
        return r;
    }
    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

    NCPoly scaled(const RatFunc& c) const {
        NCPoly r;
        if (c.is_zero()) return r;
        for (const auto& [w, v] : t_) r.t_.emplace(w, v * c);
        return r;
    }

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    /// canonical text, terms in degree-lex order: "(coeff)*l_1_2*l_2_1 + (coeff)"
    std::string text(int N) const {
        if (t_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : t_) {
            if (!first) s += " + ";
            s += "(" + c.text() + ")";
            for (Gen g : w) s += "*" + gen_text(g, N);
            first = false;
        }
        return s;
    }

private:
    TermMap t_;
};

template <>
struct RingOps<NCPoly> {
    static constexpr bool commutative = false;
    static NCPoly zero() { return NCPoly(); }
    static NCPoly one() { return NCPoly::one(); }
    static bool is_zero(const NCPoly& x) { return x.is_zero(); }
};

/// L as a two-leg operator over NCPoly: (L1)^{ab}_{cb} = l^a_c
inline TensorOp<NCPoly> l_matrix_two_legs(int N) {
    TensorOp<NCPoly> op(N, 2);
    for (int a = 1; a <= N; ++a)
        for (int c = 1; c <= N; ++c)
            for (int b = 1; b <= N; ++b)
                op.add_entry(MultiIndex{a, b}, MultiIndex{c, b},
                             NCPoly::generator(gen_code(a, c, N)));
    return op;
}

/// L embedded on leg 1 of a `legs`-leg space
inline TensorOp<NCPoly> l_matrix_leg1(int N, int legs) {
    TensorOp<NCPoly> op(N, 1);
    for (int a = 1; a <= N; ++a)
        for (int c = 1; c <= N; ++c)
            op.add_entry(MultiIndex{a}, MultiIndex{c}, NCPoly::generator(gen_code(a, c, N)));
    return embed(op, 1, legs);
}

inline TensorOp<NCPoly> lift_to_nc(const TensorOp<LaurentPoly>& op) {
    return op.map_coeffs<NCPoly>([](const LaurentPoly& c) { return NCPoly::scalar(RatFunc(c)); });
}
inline CoTensor<NCPoly> lift_to_nc(const CoTensor<LaurentPoly>& v) {
    return v.map_coeffs<NCPoly>([](const LaurentPoly& c) { return NCPoly::scalar(RatFunc(c)); });
}

/**
 * Componentwise expansion of L1 R L1 R - R L1 R L1 on two legs: the defining
 * quadratic relations. Returns every nonzero component.
 */
inline std::vector<NCPoly> derive_relations(const RHat& rh) {
    int N = rh.N();
    auto l1 = l_matrix_two_legs(N);
    auto r = lift_to_nc(rh.op());
    auto lhs = compose(compose(compose(l1, r), l1), r);
    auto rhs = compose(compose(compose(r, l1), r), l1);
    auto diff = lhs - rhs;
    std::vector<NCPoly> rels;
    for (const auto& [k, p] : diff.entries()) rels.push_back(p);
    return rels;
}

/**
 * Normal-form engine for the REA. Rules map each inversion pair to a tail of
 * sorted degree-2 words; every rewrite strictly decreases a word in the
 * degree-lex order, so reduction terminates for any strategy.
 */
class RewriteSystem {
public:
    enum class Strategy { leftmost, rightmost };

    static RewriteSystem build(const RHat& rh) {
        int N = rh.N();
        int G = N * N;
        auto rels = derive_relations(rh);
        // columns index words of length 2: (g1, g2) -> g1*G + g2
        std::vector<SparseRow<RatFunc>> rows;
        for (const auto& rel : rels) {
            SparseRow<RatFunc> row;
            for (const auto& [w, c] : rel.terms()) {
                if (w.size() != 2)
                    throw std::logic_error("RewriteSystem: relation is not quadratic");
                row[int(w[0]) * G + int(w[1])] = c;
            }
            if (!row.empty()) rows.push_back(std::move(row));
        }
        // eliminate the greatest monomial first
        std::vector<int> col_order(size_t(G) * size_t(G));
        for (size_t c = 0; c < col_order.size(); ++c) col_order[c] = int(col_order.size() - 1 - c);
        auto rr = rref(std::move(rows), col_order);

        int expected = G * (G - 1) / 2;
        if (rr.rank() != expected)
            throw std::logic_error("RewriteSystem: relation span has rank " +
                                   std::to_string(rr.rank()) + ", expected " +
                                   std::to_string(expected) + " (PBW failure)");
        RewriteSystem rs(N);
        for (size_t k = 0; k < rr.rows.size(); ++k) {
            Gen a = Gen(rr.pivot_cols[k] / G);
            Gen b = Gen(rr.pivot_cols[k] % G);
            if (!(a > b))
                throw std::logic_error("RewriteSystem: leading monomial " + gen_text(a, N) + "*" +
                                       gen_text(b, N) + " is not an inversion (PBW failure)");
            NCPoly tail;
            for (const auto& [col, c] : rr.rows[k]) {
                if (col == rr.pivot_cols[k]) continue;
                Gen u = Gen(col / G), v = Gen(col % G);
                if (u > v)
                    throw std::logic_error("RewriteSystem: tail word not sorted (PBW failure)");
                tail.add_term(Word{u, v}, -c);
            }
            rs.rules_.emplace(std::make_pair(a, b), std::move(tail));
        }
        // every inversion must carry a rule
        for (Gen a = 0; a < Gen(G); ++a)
            for (Gen b = 0; b < a; ++b)
                if (rs.rules_.find({a, b}) == rs.rules_.end())
                    throw std::logic_error("RewriteSystem: missing rule for inversion (PBW failure)");
        return rs;
    }

    int N() const { return N_; }
    int rule_count() const { return int(rules_.size()); }
    const std::map<std::pair<Gen, Gen>, NCPoly>& rules() const { return rules_; }

    const NCPoly& rule(Gen a, Gen b) const {
        auto it = rules_.find({a, b});
        if (it == rules_.end()) throw std::invalid_argument("RewriteSystem: no rule for pair");
        return it->second;
    }

    /// unique normal form: all words sorted nondecreasing (leftmost strategy, memoized)
    NCPoly normal_form(const NCPoly& p) const {
        NCPoly r;
        for (const auto& [w, c] : p.terms()) r += word_normal_form(w).scaled(c);
        return r;
    }

    const NCPoly& word_normal_form(const Word& w0) const {
        // results are pure; the lock only guards the cache, so concurrent
        // per-entry normal forms stay safe and deterministic
        std::lock_guard<std::mutex> lock(*memo_mutex_);
        auto it = memo_.find(w0);
        if (it != memo_.end()) return it->second;
        // explicit DFS stack; every child word is strictly smaller in deg-lex
        std::vector<Word> todo{w0};
        while (!todo.empty()) {
            const Word& w = todo.back();
            if (memo_.count(w)) {
                todo.pop_back();
                continue;
            }
            int k = leftmost_inversion_(w);
            if (k < 0) {
                memo_.emplace(w, NCPoly::monomial(w, RatFunc::one()));
                todo.pop_back();
                continue;
            }
            const NCPoly& tail = rule(w[k], w[k + 1]);
            bool ready = true;
            std::vector<std::pair<Word, RatFunc>> children;
            for (const auto& [u, c] : tail.terms()) {
                Word child = w;
                child[k] = u[0];
                child[k + 1] = u[1];
                if (!memo_.count(child)) ready = false;
                children.emplace_back(std::move(child), c);
            }
            if (!ready) {
                for (auto& [child, c] : children)
                    if (!memo_.count(child)) todo.push_back(child);
                continue;
            }
            NCPoly nf;
            for (const auto& [child, c] : children) nf += memo_.at(child).scaled(c);
            memo_.emplace(w, std::move(nf));
            todo.pop_back();
        }
        return memo_.at(w0);
    }

    /// full reduction under an explicit strategy, uncached; used by the
    /// confluence check as an independent path
    NCPoly reduce_with_strategy(const Word& w0, Strategy s) const {
        NCPoly done;
        std::map<Word, RatFunc, DegLexLess> pending;
        pending.emplace(w0, RatFunc::one());
        while (!pending.empty()) {
            auto top = std::prev(pending.end());
            Word w = top->first;
            RatFunc c = top->second;
            pending.erase(top);
            int k = (s == Strategy::leftmost) ? leftmost_inversion_(w) : rightmost_inversion_(w);
            if (k < 0) {
                done.add_term(w, c);
                continue;
            }
            const NCPoly& tail = rule(w[k], w[k + 1]);
            for (const auto& [u, d] : tail.terms()) {
                Word child = w;
                child[k] = u[0];
                child[k + 1] = u[1];
                RatFunc nc = c * d;
                if (nc.is_zero()) continue;
                auto [it, inserted] = pending.emplace(std::move(child), nc);
                if (!inserted) {
                    it->second += nc;
                    if (it->second.is_zero()) pending.erase(it);
                }
            }
        }
        return done;
    }

    struct ConfluenceResult {
        bool pass = true;
        long words_checked = 0;
        Word counterexample;
    };

    /// exhaustive strategy-independence check over all words of length `degree`
    ConfluenceResult check_confluence(int degree) const {
        if (degree < 3)
            throw std::invalid_argument("check_confluence: degree >= 3 required");
        ConfluenceResult res;
        int G = N_ * N_;
        Word w(size_t(degree), 0);
        while (true) {
            NCPoly left = reduce_with_strategy(w, Strategy::leftmost);
            NCPoly right = reduce_with_strategy(w, Strategy::rightmost);
            ++res.words_checked;
            if (left != right || left != word_normal_form(w)) {
                res.pass = false;
                res.counterexample = w;
                return res;
            }
            // next word in the odometer order
            int pos = degree - 1;
            while (pos >= 0 && w[pos] == Gen(G - 1)) {
                w[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++w[pos];
        }
        return res;
    }

    struct CentralityResult {
        bool central = true;
        Gen offender = 0;
        NCPoly residual;
    };

    /// p is central iff nf(p g - g p) = 0 for every generator g
    CentralityResult is_central(const NCPoly& p) const {
        for (Gen g = 0; g < Gen(N_ * N_); ++g) {
            NCPoly gp = NCPoly::generator(g);
            NCPoly res = normal_form(p * gp - gp * p);
            if (!res.is_zero()) return {false, g, std::move(res)};
        }
        return {};
    }

private:
    explicit RewriteSystem(int N) : N_(N) {}

    int N_;
    std::map<std::pair<Gen, Gen>, NCPoly> rules_;
    mutable std::unique_ptr<std::mutex> memo_mutex_ = std::make_unique<std::mutex>();
    mutable std::unordered_map<Word, NCPoly, WordHash> memo_;

    static int leftmost_inversion_(const Word& w) {
        for (size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k] > w[k + 1]) return int(k);
        return -1;
    }
    static int rightmost_inversion_(const Word& w) {
        for (size_t k = w.size(); k >= 2; --k)
            if (w[k - 2] > w[k - 1]) return int(k - 2);
        return -1;
    }
};

/// Square matrix over NCPoly; entry products preserve word order.
class NCMatrix {
public:
    explicit NCMatrix(int n) : n_(n), a_(size_t(n) * size_t(n)) {}

    static NCMatrix identity(int n) {
        NCMatrix m(n);
        for (int i = 1; i <= n; ++i) m.at(i, i) = NCPoly::one();
        return m;
    }
    /// the matrix of generators L = (l^i_j)
    static NCMatrix generators(int N) {
        NCMatrix m(N);
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) m.at(i, j) = NCPoly::generator(gen_code(i, j, N));
        return m;
    }

    int size() const { return n_; }
    NCPoly& at(int i, int j) { return a_.at(size_t(i - 1) * size_t(n_) + size_t(j - 1)); }
    const NCPoly& at(int i, int j) const {
        return a_.at(size_t(i - 1) * size_t(n_) + size_t(j - 1));
    }

    friend NCMatrix operator+(const NCMatrix& x, const NCMatrix& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("NCMatrix+: shape mismatch");
        NCMatrix r(x.n_);
        for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
        return r;
    }
    friend NCMatrix operator-(const NCMatrix& x, const NCMatrix& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("NCMatrix-: shape mismatch");
        NCMatrix r(x.n_);
        for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
        return r;
    }

    /// entrywise sum over products A_ik B_kj, word order preserved
    friend NCMatrix operator*(const NCMatrix& x, const NCMatrix& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("NCMatrix*: shape mismatch");
        NCMatrix r(x.n_);
        for (int i = 1; i <= x.n_; ++i)
            for (int j = 1; j <= x.n_; ++j) {
                NCPoly acc;
                for (int k = 1; k <= x.n_; ++k) acc += x.at(i, k) * y.at(k, j);
                r.at(i, j) = std::move(acc);
            }
        return r;
    }

    NCMatrix pow(int k) const {
        if (k < 0) throw std::invalid_argument("NCMatrix::pow: negative power");
        NCMatrix r = identity(n_);
        for (int t = 0; t < k; ++t) r = r * (*this);
        return r;
    }

    NCMatrix scaled_left(const NCPoly& c) const {
        NCMatrix r(n_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = c * a_[k];
        return r;
    }
    NCMatrix scaled_right(const NCPoly& c) const {
        NCMatrix r(n_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
        return r;
    }

    NCMatrix normal_formed(const RewriteSystem& rs) const {
        NCMatrix r(n_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = rs.normal_form(a_[k]);
        return r;
    }

    bool is_zero() const {
        for (const auto& p : a_)
            if (!p.is_zero()) return false;
        return true;
    }

    friend bool operator==(const NCMatrix& x, const NCMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }
    friend bool operator!=(const NCMatrix& x, const NCMatrix& y) { return !(x == y); }

private:
    int n_;
    std::vector<NCPoly> a_;
};

}  // namespace qch
