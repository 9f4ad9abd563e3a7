#pragma once

#include <tuple>
#include <vector>

#include "orbicoh/rational.hpp"

namespace orbicoh {

/// Dense matrix over arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        return m;
    }

    static IntMatrix stack_rows(const std::vector<IntMatrix>& blocks) {
        int cols = blocks.empty() ? 0 : blocks[0].cols();
        int rows = 0;
        for (const auto& b : blocks) rows += b.rows();
        IntMatrix m(rows, cols);
        int r = 0;
        for (const auto& b : blocks) {
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < cols; ++j) m.at(r + i, j) = b.at(i, j);
            r += b.rows();
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    IntMatrix operator*(const IntMatrix& o) const {
        IntMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        IntMatrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        std::vector<Rational> r(rows_, Rational(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (at(i, j) != 0) r[i] += Rational(at(i, j)) * v[j];
        return r;
    }

    /// Determinant by exact rational elimination.
    Rational det() const {
        if (rows_ != cols_) throw std::logic_error("det: not square");
        int n = rows_;
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = Rational(at(i, j));
        Rational d(1);
        for (int c = 0; c < n; ++c) {
            int p = -1;
            for (int r = c; r < n; ++r)
                if (!m[r][c].is_zero()) { p = r; break; }
            if (p < 0) return Rational(0);
            if (p != c) { std::swap(m[p], m[c]); d = -d; }
            d *= m[c][c];
            Rational pivinv = Rational(1) / m[c][c];
            for (int r = c + 1; r < n; ++r) {
                if (m[r][c].is_zero()) continue;
                Rational f = m[r][c] * pivinv;
                for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
            }
        }
        return d;
    }

    /// Exact inverse of a unimodular matrix (entries stay integral).
    IntMatrix inverse_unimodular() const {
        if (rows_ != cols_) throw std::logic_error("inverse_unimodular: not square");
        int n = rows_;
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m[i][j] = Rational(at(i, j));
            m[i][n + i] = Rational(1);
        }
        for (int c = 0; c < n; ++c) {
            int p = -1;
            for (int r = c; r < n; ++r)
                if (!m[r][c].is_zero()) { p = r; break; }
            if (p < 0) throw std::logic_error("inverse_unimodular: singular");
            std::swap(m[p], m[c]);
            Rational pivinv = Rational(1) / m[c][c];
            for (int j = 0; j < 2 * n; ++j) m[c][j] *= pivinv;
            for (int r = 0; r < n; ++r) {
                if (r == c || m[r][c].is_zero()) continue;
                Rational f = m[r][c];
                for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
            }
        }
        IntMatrix inv(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!m[i][n + j].is_integer()) throw std::logic_error("inverse_unimodular: not unimodular");
                inv.at(i, j) = m[i][n + j].num();
            }
        return inv;
    }

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

/// U*A*V = D with U, V unimodular and D diagonal satisfying d_1 | d_2 | ...
struct SNFResult {
    IntMatrix U, D, V;

    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        int n = std::min(D.rows(), D.cols());
        for (int i = 0; i < n; ++i) d.push_back(D.at(i, i));
        return d;
    }
};

namespace detail {

struct SNFWorker {
    IntMatrix D, U, V;

    explicit SNFWorker(const IntMatrix& A)
        : D(A), U(IntMatrix::identity(A.rows())), V(IntMatrix::identity(A.cols())) {}

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < D.cols(); ++j) std::swap(D.at(a, j), D.at(b, j));
        for (int j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < D.rows(); ++i) std::swap(D.at(i, a), D.at(i, b));
        for (int i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
    }
    void add_row(int dst, int src, const Int& f) {  // row_dst += f * row_src
        for (int j = 0; j < D.cols(); ++j) D.at(dst, j) += f * D.at(src, j);
        for (int j = 0; j < U.cols(); ++j) U.at(dst, j) += f * U.at(src, j);
    }
    void add_col(int dst, int src, const Int& f) {
        for (int i = 0; i < D.rows(); ++i) D.at(i, dst) += f * D.at(i, src);
        for (int i = 0; i < V.rows(); ++i) V.at(i, dst) += f * V.at(i, src);
    }
    void negate_row(int r) {
        for (int j = 0; j < D.cols(); ++j) D.at(r, j) = -D.at(r, j);
        for (int j = 0; j < U.cols(); ++j) U.at(r, j) = -U.at(r, j);
    }

    // Smallest nonzero |entry| in the submatrix at (t,t); ties broken by (row, col).
    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        Int best;
        for (int i = t; i < D.rows(); ++i)
            for (int j = t; j < D.cols(); ++j) {
                if (D.at(i, j) == 0) continue;
                Int v = abs(D.at(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    // Clears row t and column t outside the pivot, leaving the pivot at (t,t).
    void clear_position(int t) {
        for (;;) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) return;
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool dirty = false;
            for (int i = t + 1; i < D.rows(); ++i) {
                if (D.at(i, t) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), D.at(i, t).get_mpz_t(), D.at(t, t).get_mpz_t());
                if (q != 0) add_row(i, t, -q);
                if (D.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < D.cols(); ++j) {
                if (D.at(t, j) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), D.at(t, j).get_mpz_t(), D.at(t, t).get_mpz_t());
                if (q != 0) add_col(j, t, -q);
                if (D.at(t, j) != 0) dirty = true;
            }
            if (!dirty) {
                bool clean = true;
                for (int i = t + 1; i < D.rows() && clean; ++i)
                    if (D.at(i, t) != 0) clean = false;
                for (int j = t + 1; j < D.cols() && clean; ++j)
                    if (D.at(t, j) != 0) clean = false;
                if (clean) return;
            }
        }
    }

    SNFResult run() {
        int steps = std::min(D.rows(), D.cols());
        for (int t = 0; t < steps; ++t) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            clear_position(t);
        }
        // Divisibility chain: merge violating adjacent diagonal entries.
        for (;;) {
            int bad = -1;
            for (int s = 0; s + 1 < steps; ++s) {
                const Int& a = D.at(s, s);
                const Int& b = D.at(s + 1, s + 1);
                if (a == 0 && b != 0) { bad = s; break; }
                if (a != 0 && b % a != 0) { bad = s; break; }
            }
            if (bad < 0) break;
            add_row(bad, bad + 1, Int(1));
            clear_position(bad);
        }
        for (int s = 0; s < steps; ++s)
            if (D.at(s, s) < 0) negate_row(s);
        return SNFResult{U, D, V};
    }
};

}  // namespace detail

inline SNFResult smith_normal_form(const IntMatrix& A) {
    detail::SNFWorker w(A);
    return w.run();
}

}  // namespace orbicoh
