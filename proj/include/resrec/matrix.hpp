#pragma once

// Dense matrices over Z and the fraction-free (Bareiss) determinant.
//
// Bareiss keeps every intermediate an exact integer (a minor of the input),
// which is what makes it usable as the determinant oracle for Laplacian
// minors: no rational blow-up, no rounding anywhere.

#include "resrec/numeric.hpp"

#include <gmp.h>

#include <algorithm>
#include <set>
#include <vector>

namespace resrec {

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw error("ExactMatrix: negative dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    BigInt& operator()(int r, int c) { return e_[index(r, c)]; }
    const BigInt& operator()(int r, int c) const { return e_[index(r, c)]; }

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    /// Matrix with the 1-based rows in A and columns in B removed; relative
    /// order of the remaining rows/columns is preserved.
    ExactMatrix with_deleted(const std::vector<int>& row_set, const std::vector<int>& col_set) const {
        auto check = [](const std::vector<int>& s, int bound, const char* what) {
            std::set<int> seen;
            for (int i : s) {
                if (i < 1 || i > bound) throw error(std::string("delete: index out of range in ") + what);
                if (!seen.insert(i).second) throw error(std::string("delete: duplicate index in ") + what);
            }
            return seen;
        };
        std::set<int> dr = check(row_set, rows_, "rows");
        std::set<int> dc = check(col_set, cols_, "columns");
        ExactMatrix out(rows_ - static_cast<int>(dr.size()), cols_ - static_cast<int>(dc.size()));
        int ro = 0;
        for (int r = 1; r <= rows_; ++r) {
            if (dr.count(r)) continue;
            int co = 0;
            for (int c = 1; c <= cols_; ++c) {
                if (dc.count(c)) continue;
                out(ro, co) = (*this)(r - 1, c - 1);
                ++co;
            }
            ++ro;
        }
        return out;
    }

    ExactMatrix transposed() const {
        ExactMatrix out(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

private:
    size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw error("ExactMatrix: index out of range");
        return static_cast<size_t>(r) * cols_ + c;
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> e_;
};

/// Exact determinant by fraction-free Gaussian elimination (two-step
/// division scheme). The inner loop runs on raw mpz values: the n=500
/// oracle case does ~4e7 updates and wrapper temporaries would dominate.
inline BigInt det_fraction_free(const ExactMatrix& input) {
    if (!input.is_square()) throw error("det_fraction_free: matrix not square");
    const int n = input.rows();
    if (n == 0) return BigInt(1);

    std::vector<BigInt> m;
    m.reserve(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.push_back(input(r, c));
    auto at = [&](int r, int c) -> BigInt& { return m[static_cast<size_t>(r) * n + c]; };

    BigInt prev{1};
    int sign = 1;
    BigInt t1, t2;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (at(r, k) != 0) { p = r; break; }
            if (p < 0) return BigInt(0);
            for (int c = k; c < n; ++c) at(k, c).swap(at(p, c));
            sign = -sign;
        }
        mpz_srcptr pivot = at(k, k).backend().data();
        mpz_srcptr prevp = prev.backend().data();
        for (int i = k + 1; i < n; ++i) {
            mpz_srcptr mik = at(i, k).backend().data();
            for (int j = k + 1; j < n; ++j) {
                // m[i][j] = (m[i][j]*pivot - m[i][k]*m[k][j]) / prev  (exact)
                mpz_ptr mij = at(i, j).backend().data();
                mpz_mul(t1.backend().data(), mij, pivot);
                mpz_mul(t2.backend().data(), mik, at(k, j).backend().data());
                mpz_sub(t1.backend().data(), t1.backend().data(), t2.backend().data());
                mpz_divexact(mij, t1.backend().data(), prevp);
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : BigInt(-at(n - 1, n - 1));
}

}  // namespace resrec
