#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pim/intmat.hpp"

namespace pim {

// Half-integral symmetric matrix B (integer diagonal, half-integer
// off-diagonal), stored as the even integer matrix 2B.
class HalfIntMat {
public:
    static HalfIntMat from_twoB(IntMat twoB);
    static HalfIntMat zero(int m);
    static HalfIntMat scalar_form(const Int& b);  // 1x1 matrix (b)
    static HalfIntMat identity(int m);

    // [[A1, R/2], [tR/2, A2]] for an integer matrix R of shape size(A1) x size(A2).
    static HalfIntMat block(const HalfIntMat& A1, const IntMat& R, const HalfIntMat& A2);

    int size() const { return m_; }
    const IntMat& twoB() const { return t_; }
    const Int& twoB(int i, int j) const { return t_.at(i, j); }
    Rat entry(int i, int j) const { return Rat(t_.at(i, j)) / 2; }

    Int det_twoB() const;
    int rank() const;
    bool is_psd() const;
    bool is_pd() const;

    // B[x] = txBx, an integer for integral x.
    Int qform(std::span<const long> x) const;

    HalfIntMat transform(const IntMat& U) const;  // tU B U
    HalfIntMat principal_block(const std::vector<int>& idx) const;

    // B ~_Z Btilde + O, Btilde positive definite of size rank(B).
    // Throws NotPSD if B is not positive semidefinite.
    std::pair<HalfIntMat, int> reduce_nondegenerate() const;

    // For pd B of even size m: (-1)^{m/2} det(2B) = d * f^2 with d fundamental (or 1).
    std::pair<Int, Int> disc_split() const;

    // Squarefree square-class representatives of a rational diagonalization of
    // the quadratic form B[x] (nondegenerate B).
    std::vector<Int> rational_diagonal() const;

    // Deterministic cache key from a greedy Minkowski-style reduction of 2B.
    // Equivalent forms usually (not provably) share a key; used for caching only.
    std::string class_key() const;

    bool operator==(const HalfIntMat& o) const { return t_ == o.t_; }

private:
    explicit HalfIntMat(IntMat t) : m_(t.rows), t_(std::move(t)) {}
    int m_;
    IntMat t_;
};

}  // namespace pim
