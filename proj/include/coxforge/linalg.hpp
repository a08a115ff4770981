/*
   Copyright 2026 The coxforge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "coxforge/poly.hpp"

namespace coxforge {

template <Scalar K>
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<K>> data;

    DenseMatrix() = default;
    DenseMatrix(int r, int c, const FieldChoice& fc)
        : rows(r), cols(c), data(r, std::vector<K>(c, K::zero(fc))) {}

    K& at(int r, int c) { return data[r][c]; }
    const K& at(int r, int c) const { return data[r][c]; }
};

/// Matrix between two bidegree pieces, rows/columns indexed by explicit
/// monomial bases. The labels are carried for reporting; the numeric block
/// is what elimination consumes.
template <Scalar K>
struct GradedMatrix {
    std::vector<Monomial> row_basis;
    std::vector<Monomial> col_basis;
    DenseMatrix<K> mat;

    void check_shape() const {
        if (static_cast<int>(row_basis.size()) != mat.rows ||
            static_cast<int>(col_basis.size()) != mat.cols)
            throw ConsistencyError("GradedMatrix: basis/entry shape mismatch");
    }
};

namespace detail {

/// Row-echelon engine over F_p on double storage. Entries are exact
/// integers; eliminations run without per-step reduction and rows are
/// re-reduced just often enough to stay inside the 2^53 exact range.
class FpEchelon {
  public:
    FpEchelon(std::vector<std::vector<double>> rows, int cols, std::uint64_t p)
        : rows_(std::move(rows)), cols_(cols), p_(static_cast<double>(p)), ip_(p) {
        // how many p^2-sized accumulations fit before an entry must be reduced
        double limit = 9007199254740992.0;  // 2^53
        budget_ = static_cast<int>(limit / (p_ * p_ + p_)) - 1;
        if (budget_ < 1) budget_ = 1;
        dirt_.assign(rows_.size(), 0);
    }

    void forward() {
        const int nrows = static_cast<int>(rows_.size());
        for (int col = 0; col < cols_ && rank_ < nrows; ++col) {
            int pr = -1;
            for (int r = rank_; r < nrows; ++r) {
                if (fmodp(rows_[r][col]) != 0.0) {
                    pr = r;
                    break;
                }
            }
            if (pr < 0) continue;
            std::swap(rows_[pr], rows_[rank_]);
            std::swap(dirt_[pr], dirt_[rank_]);
            reduce_row(rank_);
            scale_row(rank_, inverse(rows_[rank_][col]), col);
            for (int r = rank_ + 1; r < nrows; ++r) eliminate(r, rank_, col);
            pivot_cols_.push_back(col);
            ++rank_;
        }
        for (int r = 0; r < rank_; ++r) reduce_row(r);
    }

    /// Back-eliminates above pivots; rows end fully reduced with unit pivots.
    void backward() {
        for (int i = rank_ - 1; i >= 0; --i) {
            for (int r = 0; r < i; ++r) eliminate(r, i, pivot_cols_[i]);
        }
        for (int r = 0; r < rank_; ++r) reduce_row(r);
    }

    int rank() const { return rank_; }
    const std::vector<int>& pivot_cols() const { return pivot_cols_; }
    double entry(int r, int c) const { return rows_[r][c]; }

  private:
    double fmodp(double x) const {
        double r = std::fmod(x, p_);
        return r < 0 ? r + p_ : r;
    }

    void reduce_row(int r) {
        for (double& x : rows_[r]) x = fmodp(x);
        dirt_[r] = 0;
    }

    void scale_row(int r, double c, int from) {
        auto& row = rows_[r];
        for (int j = from; j < cols_; ++j) row[j] = fmodp(row[j] * c);
    }

    void eliminate(int r, int pivot_row, int col) {
        double c = fmodp(rows_[r][col]);
        if (c == 0.0) {
            rows_[r][col] = 0.0;
            return;
        }
        if (++dirt_[r] >= budget_) reduce_row(r);
        const auto& prow = rows_[pivot_row];
        auto& row = rows_[r];
        for (int j = col; j < cols_; ++j) row[j] -= c * prow[j];
        row[col] = 0.0;
    }

    double inverse(double v) const {
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(ip_), nr = static_cast<std::int64_t>(v);
        while (nr != 0) {
            std::int64_t q = r / nr;
            t -= q * nt;
            std::swap(t, nt);
            r -= q * nr;
            std::swap(r, nr);
        }
        if (t < 0) t += static_cast<std::int64_t>(ip_);
        return static_cast<double>(t);
    }

    std::vector<std::vector<double>> rows_;
    int cols_;
    double p_;
    std::uint64_t ip_;
    int budget_;
    int rank_ = 0;
    std::vector<int> pivot_cols_;
    std::vector<int> dirt_;
};

inline std::vector<std::vector<double>> to_doubles(const DenseMatrix<Fp>& m) {
    std::vector<std::vector<double>> rows(m.rows, std::vector<double>(m.cols, 0.0));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) rows[r][c] = static_cast<double>(m.at(r, c).value());
    return rows;
}

/// Generic exact echelon form. Updates use cross-multiplication (no
/// division), and rational rows are renormalized to primitive integer
/// vectors after each step, which is fraction-free elimination with content
/// reduction. Over F_p the normalization hook is a no-op.
template <Scalar K>
class ExactEchelon {
  public:
    ExactEchelon(std::vector<std::vector<K>> rows, int cols, const FieldChoice& fc)
        : rows_(std::move(rows)), cols_(cols), fc_(fc) {}

    void forward() {
        const int nrows = static_cast<int>(rows_.size());
        for (int col = 0; col < cols_ && rank_ < nrows; ++col) {
            int pr = -1;
            for (int r = rank_; r < nrows; ++r)
                if (!rows_[r][col].is_zero()) {
                    pr = r;
                    break;
                }
            if (pr < 0) continue;
            std::swap(rows_[pr], rows_[rank_]);
            for (int r = rank_ + 1; r < nrows; ++r) eliminate(r, rank_, col);
            pivot_cols_.push_back(col);
            ++rank_;
        }
    }

    void backward() {
        for (int i = rank_ - 1; i >= 0; --i)
            for (int r = 0; r < i; ++r) eliminate(r, i, pivot_cols_[i]);
        // unit pivots last: the rational normalization hook rescales whole
        // rows during elimination, so scaling any earlier would not stick
        for (int i = 0; i < rank_; ++i) {
            K inv = rows_[i][pivot_cols_[i]].inv();
            for (int j = 0; j < cols_; ++j) rows_[i][j] *= inv;
        }
    }

    int rank() const { return rank_; }
    const std::vector<int>& pivot_cols() const { return pivot_cols_; }
    const K& entry(int r, int c) const { return rows_[r][c]; }

  private:
    void eliminate(int r, int pivot_row, int col) {
        const K& c = rows_[r][col];
        if (c.is_zero()) return;
        const K& pv = rows_[pivot_row][col];
        for (int j = 0; j < cols_; ++j) {
            if (j == col) continue;
            rows_[r][j] = pv * rows_[r][j] - c * rows_[pivot_row][j];
        }
        rows_[r][col] = K::zero(fc_);
        normalize(rows_[r]);
    }

    void normalize(std::vector<K>& row) {
        if constexpr (std::is_same_v<K, Rat>) {
            mpz_class den_lcm = 1, num_gcd = 0;
            for (const K& x : row) {
                if (x.is_zero()) continue;
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                        x.value().get_den_mpz_t());
            }
            for (K& x : row) {
                if (x.is_zero()) continue;
                mpq_class v = x.value() * den_lcm;
                v.canonicalize();
                x = Rat(v);
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.value().get_num_mpz_t());
            }
            if (num_gcd > 1) {
                for (K& x : row) {
                    if (x.is_zero()) continue;
                    mpq_class v = x.value() / num_gcd;
                    v.canonicalize();
                    x = Rat(v);
                }
            }
        }
    }

    std::vector<std::vector<K>> rows_;
    int cols_;
    FieldChoice fc_;
    int rank_ = 0;
    std::vector<int> pivot_cols_;
};

}  // namespace detail

template <Scalar K>
int rank_of(const DenseMatrix<K>& m, const FieldChoice& fc) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if constexpr (std::is_same_v<K, Fp>) {
        detail::FpEchelon e(detail::to_doubles(m), m.cols, fc.p);
        e.forward();
        return e.rank();
    } else {
        detail::ExactEchelon<K> e(m.data, m.cols, fc);
        e.forward();
        return e.rank();
    }
}

/// Basis of { v : M v = 0 }, in reduced form: one vector per free column,
/// with a unit in that free column, listed in increasing column order.
template <Scalar K>
std::vector<std::vector<K>> nullspace(const DenseMatrix<K>& m, const FieldChoice& fc) {
    const int cols = m.cols;
    std::vector<std::vector<K>> basis;
    if (cols == 0) return basis;

    std::vector<int> pivots;
    // rref rows materialized as K for basis extraction
    std::vector<std::vector<K>> rref;
    if (m.rows == 0) {
        pivots = {};
    } else if constexpr (std::is_same_v<K, Fp>) {
        detail::FpEchelon e(detail::to_doubles(m), cols, fc.p);
        e.forward();
        e.backward();
        pivots = e.pivot_cols();
        rref.assign(pivots.size(), std::vector<K>(cols, K::zero(fc)));
        for (size_t r = 0; r < pivots.size(); ++r)
            for (int c = 0; c < cols; ++c)
                rref[r][c] = Fp(fc.p, static_cast<std::int64_t>(e.entry(static_cast<int>(r), c)));
    } else {
        detail::ExactEchelon<K> e(m.data, cols, fc);
        e.forward();
        e.backward();
        pivots = e.pivot_cols();
        rref.assign(pivots.size(), std::vector<K>(cols, K::zero(fc)));
        for (size_t r = 0; r < pivots.size(); ++r)
            for (int c = 0; c < cols; ++c) rref[r][c] = e.entry(static_cast<int>(r), c);
    }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(cols, K::zero(fc));
        v[f] = K::one(fc);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rref[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <Scalar K>
std::vector<std::vector<K>> nullspace(const GradedMatrix<K>& m, const FieldChoice& fc) {
    m.check_shape();
    return nullspace(m.mat, fc);
}

/// Lookup table from monomial to its position in an enumerated basis.
inline std::map<Monomial, int> index_basis(const std::vector<Monomial>& basis) {
    std::map<Monomial, int> idx;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) idx.emplace(basis[i], i);
    return idx;
}

}  // namespace coxforge
