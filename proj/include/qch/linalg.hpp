/**
 * @file linalg.hpp
 * @brief Exact Gaussian elimination over a field (RatFunc or Rat).
 *
 * Rows are sparse maps column -> coefficient. rref() produces the unique
 * reduced row echelon form for a given column elimination order, so results
 * are deterministic and canonical.
 */
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qch/ring.hpp"

namespace qch {

template <class F>
using SparseRow = std::map<int, F>;

enum class PivotPolicy {
    first_row,     // smallest row index (canonical default)
    shortest_row,  // fewest entries (fill reduction for large sparse kernels)
};

template <class F>
struct RrefResult {
    std::vector<SparseRow<F>> rows;  // reduced rows, one per pivot, in elimination order
    std::vector<int> pivot_cols;     // pivot column of rows[k]
    int rank() const { return int(pivot_cols.size()); }
};

/**
 * Reduced row echelon form. Columns are eliminated in the order given by
 * `col_order`; every column in the matrix must appear there. Pivot entries are
 * normalized to one and cleared from every other row.
 */
template <class F>
RrefResult<F> rref(std::vector<SparseRow<F>> rows, const std::vector<int>& col_order,
                   PivotPolicy policy = PivotPolicy::first_row) {
    std::vector<bool> used(rows.size(), false);
    std::vector<std::pair<size_t, int>> pivots;  // (row, col) in elimination order
    for (int col : col_order) {
        // pick a pivot row with a nonzero entry in this column
        std::optional<size_t> pick;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (used[r]) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end() || RingOps<F>::is_zero(it->second)) continue;
            if (!pick) {
                pick = r;
            } else if (policy == PivotPolicy::shortest_row &&
                       rows[r].size() < rows[*pick].size()) {
                pick = r;
            }
            if (policy == PivotPolicy::first_row) break;
        }
        if (!pick) continue;
        size_t p = *pick;
        used[p] = true;
        // normalize to a monic pivot
        F inv_lead = RingOps<F>::one() / rows[p].at(col);
        for (auto& [c, v] : rows[p]) v = v * inv_lead;
        // eliminate the column from every other row, pivot rows included
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == p) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end() || RingOps<F>::is_zero(it->second)) continue;
            F factor = it->second;
            for (const auto& [c, v] : rows[p]) {
                auto jt = rows[r].find(c);
                if (jt == rows[r].end()) {
                    F nv = -(factor * v);
                    if (!RingOps<F>::is_zero(nv)) rows[r].emplace(c, std::move(nv));
                } else {
                    jt->second = jt->second - factor * v;
                    if (RingOps<F>::is_zero(jt->second)) rows[r].erase(jt);
                }
            }
        }
        pivots.emplace_back(p, col);
    }
    RrefResult<F> out;
    for (auto& [p, col] : pivots) {
        out.rows.push_back(std::move(rows[p]));
        out.pivot_cols.push_back(col);
    }
    return out;
}

/**
 * Basis of the kernel of the homogeneous system (rows) x = 0 over `num_cols`
 * unknowns. Each kernel vector sets one free column to 1.
 */
template <class F>
std::vector<SparseRow<F>> kernel_basis(const std::vector<SparseRow<F>>& rows, int num_cols,
                                       PivotPolicy policy = PivotPolicy::shortest_row) {
    std::vector<int> col_order(num_cols);
    for (int c = 0; c < num_cols; ++c) col_order[c] = c;
    RrefResult<F> rr = rref(rows, col_order, policy);
    std::vector<bool> is_pivot(num_cols, false);
    std::vector<int> pivot_row_of(num_cols, -1);
    for (size_t k = 0; k < rr.pivot_cols.size(); ++k) {
        is_pivot[rr.pivot_cols[k]] = true;
        pivot_row_of[rr.pivot_cols[k]] = int(k);
    }
    std::vector<SparseRow<F>> basis;
    for (int f = 0; f < num_cols; ++f) {
        if (is_pivot[f]) continue;
        SparseRow<F> v;
        v[f] = RingOps<F>::one();
        for (size_t k = 0; k < rr.rows.size(); ++k) {
            auto it = rr.rows[k].find(f);
            if (it != rr.rows[k].end() && !RingOps<F>::is_zero(it->second))
                v[rr.pivot_cols[k]] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Incrementally maintained row space; reports whether each added vector was
/// already in the span. The basis is kept fully reduced (no row contains
/// another row's pivot column). Used for minimal-polynomial degrees.
template <class F>
class IncrementalSpan {
public:
    /// returns true if v was dependent on the vectors added so far
    bool add(SparseRow<F> v) {
        for (const auto& [pc, row] : basis_) reduce_by_(v, pc, row);
        if (v.empty()) return true;
        int pc = v.begin()->first;
        F inv_lead = RingOps<F>::one() / v.begin()->second;
        for (auto& [c, w] : v) w = w * inv_lead;
        for (auto& [opc, row] : basis_) reduce_by_(row, pc, v);
        basis_.emplace(pc, std::move(v));
        return false;
    }

    int rank() const { return int(basis_.size()); }

private:
    std::map<int, SparseRow<F>> basis_;  // pivot col -> reduced row

    /// subtract (target[pc]) * row from target, clearing column pc
    static void reduce_by_(SparseRow<F>& target, int pc, const SparseRow<F>& row) {
        auto it = target.find(pc);
        if (it == target.end() || RingOps<F>::is_zero(it->second)) return;
        F factor = it->second;
        for (const auto& [c, w] : row) {
            auto jt = target.find(c);
            if (jt == target.end()) {
                F nv = -(factor * w);
                if (!RingOps<F>::is_zero(nv)) target.emplace(c, std::move(nv));
            } else {
                jt->second = jt->second - factor * w;
                if (RingOps<F>::is_zero(jt->second)) target.erase(jt);
            }
        }
    }
};

/// Exact determinant of a dense rational matrix by fraction-full elimination.
inline Rat rat_det(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Rat det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rat inv = Rat(1) / m[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] * inv;
            for (size_t k = c; k < n; ++k) {
                m[r][k] -= f * m[c][k];
                m[r][k].canonicalize();
            }
        }
    }
    det.canonicalize();
    return det;
}

}  // namespace qch
