#include "pim/pullback.hpp"

#include <array>

#include "pim/eisenstein.hpp"
#include "pim/numtheory.hpp"
#include "pim/qform_enum.hpp"

namespace pim {

namespace {

Rat rat_det(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = 1 / m[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] * inv;
            for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

Rat minor_det(const HalfIntMat& B, const std::vector<int>& rows, const std::vector<int>& cols) {
    std::vector<std::vector<Rat>> m(rows.size(), std::vector<Rat>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) m[i][j] = B.entry(rows[i], cols[j]);
    return rat_det(std::move(m));
}

Scalar scalar_det(std::vector<std::vector<Scalar>> m) {
    size_t n = m.size();
    Scalar det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Scalar(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Scalar inv = m[col][col].inverse();
        for (size_t i = col + 1; i < n; ++i) {
            if (m[i][col].is_zero()) continue;
            Scalar f = m[i][col] * inv;
            for (size_t j = col; j < n; ++j) m[i][j] = m[i][j] - f * m[col][j];
        }
    }
    return det;
}

}  // namespace

std::array<Rat, 4> q_poly_pieces(const HalfIntMat& B) {
    if (B.size() != 6) throw Error("q_poly: B must be 6x6");
    const std::vector<int> lo{0, 1, 2}, hi{3, 4, 5};
    Rat detW = minor_det(B, lo, hi);
    Rat P0 = -detW * detW;

    Rat P1(0);
    for (int i1 = 0; i1 < 3; ++i1)
        for (int i2 = 3; i2 < 6; ++i2)
            for (int i3 = i2 + 1; i3 < 6; ++i3) {
                std::vector<int> first{i1, i2, i3};
                std::vector<int> rest;
                for (int t = 0; t < 6; ++t)
                    if (t != i1 && t != i2 && t != i3) rest.push_back(t);
                // (-1)^{i1+i2+i3} with the paper's 1-based indices: flip parity.
                int sign = ((i1 + i2 + i3) % 2 == 0) ? -1 : 1;
                P1 += Rat(sign) * minor_det(B, first, lo) * minor_det(B, rest, hi);
            }

    Rat P3 = minor_det(B, lo, lo) * minor_det(B, hi, hi);
    Rat detT = minor_det(B, {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5});
    Rat P2 = detT - P0 - P1 - P3;
    return {P0, P1, P2, P3};
}

Rat q_poly_3k(const HalfIntMat& B, int k) {
    auto P = q_poly_pieces(B);
    return frac(2L * (k - 1) * (2 * k - 3) * (k - 2), 3) * P[0] +
           frac(1L * (k - 1) * (2 * k - 3), 3) * P[1] + frac(2L * (k - 1), 3) * P[2] + P[3];
}

Rat big_C(int k, const HalfIntMat& Ai, const HalfIntMat& A) {
    if (Ai.size() != 3 || A.size() != 3) throw Error("big_C: blocks must be 3x3");
    if (k % 2 != 0 || k < 8) throw Error("big_C: k must be even >= 8");
    Rat pref = Rat(-3) * gamma_ratio(2 * k - 3, 2 * k) * gamma_ratio(2 * k - 4, 2 * k - 1) *
               Rat(pow_int(2, static_cast<unsigned>(3 * k + 7))) *
               Rat((2 * k - 1) * (2 * k - 3) * (k - 1));
    Rat acc(0);
    for (const auto& R : enumerate_R_block(Ai, A)) {
        HalfIntMat B = HalfIntMat::block(Ai, R, A);
        acc += fc_even_genus(B, k) * q_poly_3k(B, k);
    }
    return pref * acc;
}

BasisTable BasisTable::galois_conj() const {
    BasisTable t;
    t.Ai = Ai;
    t.a.resize(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (const auto& v : a[i]) t.a[i].push_back(v.conj());
    return t;
}

Scalar extract_std_L(int k, const BasisTable& table, const HalfIntMat& A, const Scalar& cF1_at_A) {
    int d = table.dim();
    if (d == 0 || static_cast<int>(table.a.size()) != d) throw Error("extract_std_L: bad table");
    std::vector<std::vector<Scalar>> den(table.a);
    Scalar det_a = scalar_det(den);
    if (det_a.is_zero()) throw Error("extract_std_L: det(a_ij) = 0");
    std::vector<std::vector<Scalar>> num(table.a);
    for (int i = 0; i < d; ++i) num[i][0] = Scalar(big_C(k, table.Ai[i], A));
    return cF1_at_A * scalar_det(num) / det_a;
}

Scalar extract_std_L(int k, const BasisTable& table) {
    return extract_std_L(k, table, table.Ai.at(0), table.a.at(0).at(0));
}

QSeries g_nu(int l1, int l2, int k, int N) {
    if ((l1 - l2) < 3 || (l1 - l2) % 2 == 0 || k % 2 != 0 || k < l1 + 1 || k > l1 + l2 - 3)
        throw Error("g_nu: (l1,l2,k) violates the bracket conditions");
    int a = l1 - l2 + 1, b = l1 + l2 - k + 1;
    int nu = k - l1 - 1;
    QSeries Ea = e1_star(a, N), Eb = e1_star(b, N);
    std::vector<QSeries> da{Ea}, db{Eb};
    for (int j = 1; j <= nu; ++j) {
        da.push_back(da.back().qd());
        db.push_back(db.back().qd());
    }
    QSeries acc(N);
    for (int mu = 0; mu <= nu; ++mu) {
        Rat coef = Rat(binomial(static_cast<unsigned>(nu), static_cast<unsigned>(mu))) *
                   gamma_ratio(a + nu, a + mu) * gamma_ratio(b + nu, b + nu - mu);
        if ((nu - mu) % 2 == 1) coef = -coef;
        acc = acc + Scalar(coef) * (da[mu] * db[nu - mu]);
    }
    acc = acc.with_weight2(2 * k);
    if (nu >= 1 && !acc.coeff(0).is_zero()) throw ConsistencyError("g_nu: constant term nonzero");
    return acc;
}

namespace {
Rat gamma_factor(int k, int l1) {
    Rat g = gamma_ratio(k - 1, l1) / Rat(pow_int(2, static_cast<unsigned>(k - 1)));
    return (k / 2) % 2 == 0 ? g : -g;
}

Scalar hecke_L_impl(int l1, int l2, const Eigenform& f, const std::vector<int>* rows, int N) {
    int k = f.weight;
    QSeries G = g_nu(l1, l2, k, N);
    auto eig = eigenforms(k, N);
    std::vector<QSeries> basis;
    int idx = -1;
    for (size_t i = 0; i < eig.size(); ++i) {
        basis.push_back(eig[i].q);
        if (eig[i].coeff(2) == f.coeff(2)) idx = static_cast<int>(i);
    }
    if (idx < 0) throw Error("product_hecke_L: f is not an eigenform of S_" + std::to_string(k));
    auto x = rows ? coords_in_span(G, basis, *rows) : coords_in_span(G, basis);
    return Scalar(gamma_factor(k, l1)).inverse() * x[static_cast<size_t>(idx)];
}
}  // namespace

Scalar product_hecke_L(int l1, int l2, const Eigenform& f, int N) {
    return hecke_L_impl(l1, l2, f, nullptr, N);
}

Scalar product_hecke_L(int l1, int l2, const Eigenform& f, const std::vector<int>& rows, int N) {
    return hecke_L_impl(l1, l2, f, &rows, N);
}

}  // namespace pim
