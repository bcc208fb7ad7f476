#include "pim/qseries.hpp"

#include <algorithm>

namespace pim {

namespace {
std::optional<int> add_weights(const std::optional<int>& a, const std::optional<int>& b) {
    if (a && b) return *a + *b;
    return std::nullopt;
}
std::optional<int> same_weight(const std::optional<int>& a, const std::optional<int>& b) {
    if (a && b && *a == *b) return a;
    return std::nullopt;
}
}  // namespace

QSeries QSeries::truncate(int new_prec) const {
    if (new_prec > prec_) throw InsufficientPrecision("truncate to " + std::to_string(new_prec));
    QSeries r(new_prec);
    for (int n = 0; n <= new_prec; ++n) r.c_[n] = c_[n];
    r.weight2_ = weight2_;
    return r;
}

QSeries operator+(const QSeries& x, const QSeries& y) {
    int N = std::min(x.prec_, y.prec_);
    QSeries r(N);
    for (int n = 0; n <= N; ++n) r.c_[n] = x.c_[n] + y.c_[n];
    r.weight2_ = same_weight(x.weight2_, y.weight2_);
    return r;
}

QSeries operator-(const QSeries& x, const QSeries& y) {
    int N = std::min(x.prec_, y.prec_);
    QSeries r(N);
    for (int n = 0; n <= N; ++n) r.c_[n] = x.c_[n] - y.c_[n];
    r.weight2_ = same_weight(x.weight2_, y.weight2_);
    return r;
}

QSeries QSeries::operator-() const {
    QSeries r(prec_);
    for (int n = 0; n <= prec_; ++n) r.c_[n] = -c_[n];
    r.weight2_ = weight2_;
    return r;
}

QSeries operator*(const QSeries& x, const QSeries& y) {
    int N = std::min(x.prec_, y.prec_);
    QSeries r(N);
    for (int i = 0; i <= N; ++i) {
        if (x.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (y.c_[j].is_zero()) continue;
            r.c_[i + j] += x.c_[i] * y.c_[j];
        }
    }
    r.weight2_ = add_weights(x.weight2_, y.weight2_);
    return r;
}

QSeries operator*(const Scalar& s, const QSeries& y) {
    QSeries r(y.prec_);
    for (int n = 0; n <= y.prec_; ++n) r.c_[n] = s * y.c_[n];
    r.weight2_ = y.weight2_;
    return r;
}

QSeries QSeries::qd() const {
    QSeries r(prec_);
    for (int n = 1; n <= prec_; ++n) r.c_[n] = Scalar(Rat(n)) * c_[n];
    r.weight2_ = weight2_;
    return r;
}

QSeries QSeries::dilate(int m) const {
    if (m < 1) throw Error("dilate: m must be >= 1");
    QSeries r(prec_ * m);
    for (int n = 0; n <= prec_; ++n) r.c_[static_cast<size_t>(n) * m] = c_[n];
    r.weight2_ = weight2_;
    return r;
}

std::vector<Scalar> coords_in_span(const QSeries& target, const std::vector<QSeries>& basis,
                                   const std::vector<int>& rows, int min_extra) {
    size_t d = basis.size();
    if (rows.size() != d) throw Error("coords_in_span: need exactly dim(basis) rows");
    int N = target.prec();
    for (const auto& b : basis) N = std::min(N, b.prec());

    // Augmented system [A | t] on the chosen rows, Gaussian elimination over the field.
    std::vector<std::vector<Scalar>> M(d, std::vector<Scalar>(d + 1));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) M[i][j] = basis[j].coeff(rows[i]);
        M[i][d] = target.coeff(rows[i]);
    }
    for (size_t col = 0; col < d; ++col) {
        size_t piv = col;
        while (piv < d && M[piv][col].is_zero()) ++piv;
        if (piv == d) throw RankDeficient("coefficient matrix singular at column " + std::to_string(col));
        std::swap(M[piv], M[col]);
        Scalar inv = M[col][col].inverse();
        for (size_t j = col; j <= d; ++j) M[col][j] = inv * M[col][j];
        for (size_t i = 0; i < d; ++i) {
            if (i == col || M[i][col].is_zero()) continue;
            Scalar f = M[i][col];
            for (size_t j = col; j <= d; ++j) M[i][j] = M[i][j] - f * M[col][j];
        }
    }
    std::vector<Scalar> x(d);
    for (size_t i = 0; i < d; ++i) x[i] = M[i][d];

    int window = 0;
    for (int r : rows) window = std::max(window, r);
    if (N - window < min_extra)
        throw InsufficientPrecision("only " + std::to_string(N - window) +
                                    " coefficients beyond the solve window, need " +
                                    std::to_string(min_extra));
    for (int n = 0; n <= N; ++n) {
        Scalar acc(0);
        for (size_t j = 0; j < d; ++j) acc += x[j] * basis[j].coeff(n);
        if (acc != target.coeff(n))
            throw InconsistentSystem("target not in span: mismatch at q^" + std::to_string(n));
    }
    return x;
}

std::vector<Scalar> coords_in_span(const QSeries& target, const std::vector<QSeries>& basis,
                                   int min_extra) {
    size_t d = basis.size();
    int N = target.prec();
    for (const auto& b : basis) N = std::min(N, b.prec());
    // Greedy row selection: take rows that increase the rank.
    std::vector<int> rows;
    std::vector<std::vector<Scalar>> R;  // row-echelon accumulator
    for (int n = 0; n <= N && rows.size() < d; ++n) {
        std::vector<Scalar> v(d);
        bool nonzero = false;
        for (size_t j = 0; j < d; ++j) {
            v[j] = basis[j].coeff(n);
            nonzero |= !v[j].is_zero();
        }
        if (!nonzero) continue;
        // reduce v against R
        for (const auto& r : R) {
            size_t lead = 0;
            while (lead < d && r[lead].is_zero()) ++lead;
            if (lead < d && !v[lead].is_zero()) {
                Scalar f = v[lead] / r[lead];
                for (size_t j = 0; j < d; ++j) v[j] = v[j] - f * r[j];
            }
        }
        bool indep = false;
        for (size_t j = 0; j < d; ++j) indep |= !v[j].is_zero();
        if (indep) {
            R.push_back(v);
            rows.push_back(n);
        }
    }
    if (rows.size() < d) throw RankDeficient("basis has rank < dim on available coefficients");
    return coords_in_span(target, basis, rows, min_extra);
}

}  // namespace pim
