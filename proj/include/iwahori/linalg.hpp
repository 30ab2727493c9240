#pragma once

#include <cstddef>
#include <vector>

#include "iwahori/field.hpp"

namespace iwahori {

// Dense matrix over Fq. The field is passed to each operation; a Mat is
// just the code array. Row-major.
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<scalar_t> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    scalar_t& at(size_t i, size_t j) { return a[i * cols + j]; }
    scalar_t at(size_t i, size_t j) const { return a[i * cols + j]; }
    bool is_zero() const {
        for (auto x : a)
            if (x) return false;
        return true;
    }
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline Mat mat_identity(const Fq& F, size_t n) {
    Mat I(n, n);
    for (size_t i = 0; i < n; ++i) I.at(i, i) = F.one();
    return I;
}

inline Mat mat_add(const Fq& F, const Mat& A, const Mat& B) {
    check_internal(A.rows == B.rows && A.cols == B.cols, "mat_add: shape");
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
    return C;
}

inline Mat mat_sub(const Fq& F, const Mat& A, const Mat& B) {
    check_internal(A.rows == B.rows && A.cols == B.cols, "mat_sub: shape");
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.sub(A.a[i], B.a[i]);
    return C;
}

inline Mat mat_scale(const Fq& F, scalar_t c, const Mat& A) {
    Mat C(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = F.mul(c, A.a[i]);
    return C;
}

inline Mat mat_mul(const Fq& F, const Mat& A, const Mat& B) {
    check_internal(A.cols == B.rows, "mat_mul: shape");
    Mat C(A.rows, B.cols);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t k = 0; k < A.cols; ++k) {
            scalar_t aik = A.at(i, k);
            if (!aik) continue;
            const scalar_t* brow = &B.a[k * B.cols];
            scalar_t* crow = &C.a[i * C.cols];
            for (size_t j = 0; j < B.cols; ++j)
                if (brow[j]) crow[j] = F.add(crow[j], F.mul(aik, brow[j]));
        }
    return C;
}

inline std::vector<scalar_t> mat_apply(const Fq& F, const Mat& A, const std::vector<scalar_t>& v) {
    check_internal(A.cols == v.size(), "mat_apply: shape");
    std::vector<scalar_t> r(A.rows, 0);
    for (size_t i = 0; i < A.rows; ++i) {
        scalar_t s = 0;
        const scalar_t* row = &A.a[i * A.cols];
        for (size_t j = 0; j < A.cols; ++j)
            if (row[j] && v[j]) s = F.add(s, F.mul(row[j], v[j]));
        r[i] = s;
    }
    return r;
}

inline Mat mat_pow(const Fq& F, Mat A, std::uint64_t e) {
    Mat R = mat_identity(F, A.rows);
    while (e) {
        if (e & 1) R = mat_mul(F, R, A);
        A = mat_mul(F, A, A);
        e >>= 1;
    }
    return R;
}

// In-place row reduction to RREF with deterministic (first nonzero) pivoting.
// Returns pivot column indices.
inline std::vector<size_t> mat_rref(const Fq& F, Mat& A) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < A.cols && r < A.rows; ++c) {
        size_t p = r;
        while (p < A.rows && A.at(p, c) == 0) ++p;
        if (p == A.rows) continue;
        if (p != r)
            for (size_t j = 0; j < A.cols; ++j) std::swap(A.at(p, j), A.at(r, j));
        scalar_t iv = F.inv(A.at(r, c));
        for (size_t j = c; j < A.cols; ++j) A.at(r, j) = F.mul(iv, A.at(r, j));
        for (size_t i = 0; i < A.rows; ++i) {
            if (i == r) continue;
            scalar_t f = A.at(i, c);
            if (!f) continue;
            for (size_t j = c; j < A.cols; ++j)
                A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t mat_rank(const Fq& F, Mat A) { return mat_rref(F, A).size(); }

// Basis of the right kernel, as columns of the returned matrix.
inline Mat mat_kernel(const Fq& F, Mat A) {
    size_t n = A.cols;
    auto pivots = mat_rref(F, A);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    size_t k = n - pivots.size();
    Mat K(n, k);
    size_t col = 0;
    for (size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        K.at(c, col) = F.one();
        for (size_t r = 0; r < pivots.size(); ++r) K.at(pivots[r], col) = F.neg(A.at(r, c));
        ++col;
    }
    return K;
}

// Basis of the column space (deterministic: the pivot columns of A).
inline Mat mat_column_space(const Fq& F, const Mat& A) {
    Mat R = A;
    auto pivots = mat_rref(F, R);
    Mat B(A.rows, pivots.size());
    for (size_t j = 0; j < pivots.size(); ++j)
        for (size_t i = 0; i < A.rows; ++i) B.at(i, j) = A.at(i, pivots[j]);
    return B;
}

// Solve A x = b; returns empty vector if inconsistent.
inline std::vector<scalar_t> mat_solve(const Fq& F, const Mat& A, const std::vector<scalar_t>& b) {
    Mat M(A.rows, A.cols + 1);
    for (size_t i = 0; i < A.rows; ++i) {
        for (size_t j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, A.cols) = b[i];
    }
    auto pivots = mat_rref(F, M);
    std::vector<scalar_t> x(A.cols, 0);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == A.cols) return {};  // pivot in the augmented column
        x[pivots[r]] = M.at(r, A.cols);
    }
    return x;
}

// Solve A X = B column by column; all must be consistent.
inline Mat mat_solve_mat(const Fq& F, const Mat& A, const Mat& B) {
    Mat X(A.cols, B.cols);
    for (size_t j = 0; j < B.cols; ++j) {
        std::vector<scalar_t> b(B.rows);
        for (size_t i = 0; i < B.rows; ++i) b[i] = B.at(i, j);
        auto x = mat_solve(F, A, b);
        check_internal(!x.empty() || A.cols == 0, "mat_solve_mat: inconsistent system");
        for (size_t i = 0; i < A.cols; ++i) X.at(i, j) = x[i];
    }
    return X;
}

inline Mat mat_inverse(const Fq& F, const Mat& A) {
    check_internal(A.rows == A.cols, "mat_inverse: square");
    return mat_solve_mat(F, A, mat_identity(F, A.rows));
}

inline Mat mat_hcat(const Mat& A, const Mat& B) {
    check_internal(A.rows == B.rows, "mat_hcat: shape");
    Mat C(A.rows, A.cols + B.cols);
    for (size_t i = 0; i < A.rows; ++i) {
        for (size_t j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
        for (size_t j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
    }
    return C;
}

inline size_t mat_nilpotency_index(const Fq& F, const Mat& A) {
    check_internal(A.rows == A.cols, "nilpotency: square");
    Mat P = mat_identity(F, A.rows);
    for (size_t k = 1; k <= A.rows + 1; ++k) {
        P = mat_mul(F, P, A);
        if (P.is_zero()) return k;
    }
    throw InternalError("matrix is not nilpotent");
}

}  // namespace iwahori
