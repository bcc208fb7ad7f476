#pragma once

#include <vector>

#include "pim/rational.hpp"

namespace pim {

// Dense integer matrix, row-major.  Sizes here never exceed 8.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntMat transpose() const {
        IntMat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend IntMat operator*(const IntMat& x, const IntMat& y) {
        if (x.cols != y.rows) throw Error("IntMat: dimension mismatch in product");
        IntMat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                if (x.at(i, k) == 0) continue;
                for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }

    bool operator==(const IntMat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

// Determinant by fraction-free (Bareiss) elimination.
Int det_bareiss(IntMat m);

// Smith normal form with transforms: S = U * A * V, U and V unimodular, S
// diagonal with s_1 | s_2 | ... (nonnegative).
void smith_normal_form(const IntMat& A, IntMat& U, IntMat& S, IntMat& V);

}  // namespace pim
