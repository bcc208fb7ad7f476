#pragma once

#include <optional>
#include <vector>

#include "pim/scalar.hpp"

namespace pim {

// Truncated formal q-expansion sum_{n=0}^{prec} c(n) q^n over Scalar.
// Indices beyond prec are unknown, not zero.  The optional weight tag is
// bookkeeping only (stored as 2*weight to allow half-integral weights).
class QSeries {
public:
    explicit QSeries(int prec) : prec_(prec), c_(static_cast<size_t>(prec) + 1) {
        if (prec < 0) throw Error("QSeries precision must be >= 0");
    }

    int prec() const { return prec_; }
    const Scalar& coeff(int n) const {
        if (n < 0 || n > prec_) throw InsufficientPrecision("coefficient " + std::to_string(n) +
                                                            " beyond precision " + std::to_string(prec_));
        return c_[static_cast<size_t>(n)];
    }
    void set_coeff(int n, Scalar v) {
        (void)coeff(n);
        c_[static_cast<size_t>(n)] = std::move(v);
    }

    std::optional<int> weight2() const { return weight2_; }
    QSeries& with_weight2(int w2) {
        weight2_ = w2;
        return *this;
    }

    QSeries truncate(int new_prec) const;

    friend QSeries operator+(const QSeries& x, const QSeries& y);
    friend QSeries operator-(const QSeries& x, const QSeries& y);
    friend QSeries operator*(const QSeries& x, const QSeries& y);  // Cauchy product
    friend QSeries operator*(const Scalar& s, const QSeries& y);
    QSeries operator-() const;

    bool operator==(const QSeries& y) const { return prec_ == y.prec_ && c_ == y.c_; }

    // q d/dq: c(n) -> n c(n).  Makes the (2 pi i)^{-1} d/dtau prefactors exact.
    QSeries qd() const;

    // q -> q^m substitution; known range extends to m*prec.
    QSeries dilate(int m) const;

    static QSeries one(int prec) {
        QSeries r(prec);
        r.set_coeff(0, Scalar(1));
        return r;
    }
    static QSeries monomial(int n, int prec) {
        QSeries r(prec);
        r.set_coeff(n, Scalar(1));
        return r;
    }

private:
    int prec_;
    std::vector<Scalar> c_;
    std::optional<int> weight2_;
};

// Exact coordinates x with target = sum_j x_j basis_j, solved on the rows
// `rows` (which must give full column rank) and then re-verified on every
// coefficient available in all inputs; at least `min_extra` coefficients
// beyond the solve window must take part in the verification.
std::vector<Scalar> coords_in_span(const QSeries& target, const std::vector<QSeries>& basis,
                                   const std::vector<int>& rows, int min_extra = 25);

// Same, choosing pivot rows automatically (first rows reaching full rank).
std::vector<Scalar> coords_in_span(const QSeries& target, const std::vector<QSeries>& basis,
                                   int min_extra = 25);

}  // namespace pim
