#pragma once

#include <vector>

#include "orbicoh/cyclotomic.hpp"

namespace orbicoh {

using CycVector = std::vector<Cyclotomic>;

/// Dense matrix over a single cyclotomic field Q(zeta_N).
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0), level_(1) {}
    CycMatrix(int rows, int cols, long level)
        : rows_(rows), cols_(cols), level_(level),
          a_(static_cast<size_t>(rows) * cols, Cyclotomic(level)) {}

    static CycMatrix identity(int n, long level) {
        CycMatrix m(n, n, level);
        for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::from_rational(level, Rational(1));
        return m;
    }

    static CycMatrix from_columns(const std::vector<CycVector>& cols, long level, int rows) {
        CycMatrix m(rows, static_cast<int>(cols.size()), level);
        for (size_t j = 0; j < cols.size(); ++j)
            for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i].embed(level);
        return m;
    }

    static CycMatrix stack_rows(const std::vector<CycMatrix>& blocks) {
        int cols = blocks.empty() ? 0 : blocks[0].cols();
        long level = blocks.empty() ? 1 : blocks[0].level();
        int rows = 0;
        for (const auto& b : blocks) rows += b.rows();
        CycMatrix m(rows, cols, level);
        int r = 0;
        for (const auto& b : blocks) {
            if (b.level() != level || b.cols() != cols) throw std::logic_error("stack_rows: shape/level mismatch");
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < cols; ++j) m.at(r + i, j) = b.at(i, j);
            r += b.rows();
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long level() const { return level_; }
    Cyclotomic& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Cyclotomic& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const CycMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && level_ == o.level_ && a_ == o.a_;
    }

    CycMatrix embed(long M) const {
        CycMatrix m(rows_, cols_, M);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).embed(M);
        return m;
    }

    CycMatrix operator*(const CycMatrix& o) const {
        check_level(o);
        if (cols_ != o.rows_) throw std::logic_error("CycMatrix: shape mismatch in product");
        CycMatrix r(rows_, o.cols_, level_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) += at(i, k) * o.at(k, j);
                }
            }
        return r;
    }

    CycMatrix operator-(const CycMatrix& o) const {
        check_level(o);
        CycMatrix r(rows_, cols_, level_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    CycVector apply(const CycVector& v) const {
        CycVector r(rows_, Cyclotomic(level_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j].embed(level_);
        return r;
    }

    CycMatrix minus_identity() const {
        if (rows_ != cols_) throw std::logic_error("minus_identity: not square");
        return *this - identity(rows_, level_);
    }

    CycMatrix conj() const {
        CycMatrix m(rows_, cols_, level_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).conj();
        return m;
    }

    Cyclotomic det() const {
        if (rows_ != cols_) throw std::logic_error("det: not square");
        CycMatrix m(*this);
        Cyclotomic d = Cyclotomic::from_rational(level_, Rational(1));
        for (int c = 0; c < cols_; ++c) {
            int p = -1;
            for (int r = c; r < rows_; ++r)
                if (!m.at(r, c).is_zero()) { p = r; break; }
            if (p < 0) return Cyclotomic(level_);
            if (p != c) {
                for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
                d = -d;
            }
            d *= m.at(c, c);
            Cyclotomic pivinv = m.at(c, c).inverse();
            for (int r = c + 1; r < rows_; ++r) {
                if (m.at(r, c).is_zero()) continue;
                Cyclotomic f = m.at(r, c) * pivinv;
                for (int j = c; j < cols_; ++j) m.at(r, j) -= f * m.at(c, j);
            }
        }
        return d;
    }

    /// In-place Gauss-Jordan to reduced row echelon form; pivots chosen by
    /// lowest row/column index. Returns pivot columns in order.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if (!at(i, c).is_zero()) { p = i; break; }
            if (p < 0) continue;
            if (p != r)
                for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
            Cyclotomic pivinv = at(r, c).inverse();
            for (int j = 0; j < cols_; ++j) at(r, j) *= pivinv;
            for (int i = 0; i < rows_; ++i) {
                if (i == r || at(i, c).is_zero()) continue;
                Cyclotomic f = at(i, c);
                for (int j = 0; j < cols_; ++j) at(i, j) -= f * at(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const {
        CycMatrix m(*this);
        return static_cast<int>(m.rref().size());
    }

private:
    void check_level(const CycMatrix& o) const {
        if (level_ != o.level_) throw std::logic_error("CycMatrix: mixed levels");
    }

    int rows_, cols_;
    long level_;
    std::vector<Cyclotomic> a_;
};

/// Exact basis of the right kernel of M, canonical form: one vector per free
/// column, unit coordinate at that column. Deterministic.
inline std::vector<CycVector> kernel_basis(const CycMatrix& M) {
    CycMatrix R(M);
    std::vector<int> pivots = R.rref();
    std::vector<bool> is_pivot(M.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<CycVector> basis;
    for (int f = 0; f < M.cols(); ++f) {
        if (is_pivot[f]) continue;
        CycVector v(M.cols(), Cyclotomic(M.level()));
        v[f] = Cyclotomic::from_rational(M.level(), Rational(1));
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -R.at(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Unique solution x of A*x = b when A has full column rank; nullopt when the
/// system is inconsistent. Throws if the solution is not unique.
inline std::optional<CycVector> solve_unique(const CycMatrix& A, const CycVector& b) {
    CycMatrix aug(A.rows(), A.cols() + 1, A.level());
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i].embed(A.level());
    }
    std::vector<int> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;  // inconsistent
    if (static_cast<int>(pivots.size()) != A.cols())
        throw std::logic_error("solve_unique: solution not unique");
    CycVector x(A.cols(), Cyclotomic(A.level()));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), A.cols());
    return x;
}

}  // namespace orbicoh
