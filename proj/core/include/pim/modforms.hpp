#pragma once

#include <vector>

#include "pim/qseries.hpp"

namespace pim {

// Normalized elliptic Hecke eigenform of level one, coefficients in Q or
// Q(sqrt(d)), c(1) = 1.
struct Eigenform {
    int weight = 0;
    long field_d = 0;  // 0 for Q
    QSeries q = QSeries(0);

    Scalar coeff(long n) const { return q.coeff(static_cast<int>(n)); }
    Scalar ap(long p) const { return coeff(p); }
    Eigenform galois_conj() const;
};

// Element of the Kohnen plus space S^+_{k+1/2}(Gamma_0(4)): Fourier support
// restricted to (-1)^k m == 0,1 mod 4 (checked on construction).
struct PlusForm {
    int k = 0;  // weight k + 1/2
    QSeries q = QSeries(0);

    PlusForm() = default;
    PlusForm(int k_, QSeries q_);
};

int dim_sk(int k);  // dim S_k(SL_2(Z))

QSeries eis_e4(int N);     // 1 + 240 sum sigma_3 q^n
QSeries eis_e6(int N);     // 1 - 504 sum sigma_5 q^n
QSeries delta_cusp(int N); // (E4^3 - E6^2)/1728

// Monomial basis Delta * E4^a * E6^b of S_k, dimension-checked.
std::vector<QSeries> sk_basis(int k, int N);

// c'(n) = c(pn) + p^{k-1} c(n/p); result precision floor(prec/p).
QSeries hecke_Tp(int k, long p, const QSeries& a);

// Hecke eigenforms of S_k, fields of degree <= 2, +lambda branch first.
std::vector<Eigenform> eigenforms(int k, int N);

QSeries theta_series(int N);  // 1 + 2 sum q^{n^2}

// delta_l = (1/4) [ (l/2-1) E*_{l-2}(4tau) (qd/dq)theta - theta ((qd/dq)E*_{l-2})(4tau) ],
// a cusp form of weight l + 1/2 in the plus space, l even >= 6.
QSeries delta_l(int l, int N);

// Kohnen plus-space Hecke operator T(p^2) at an odd prime.
QSeries plus_hecke_Tp2(int k, long p, const QSeries& h);

// Eigenbasis of S^+_{k+1/2}(Gamma_0(4)) for k in {10, 14}, each form paired
// with its Shimura correspondent in S_{2k} (matched Hecke eigenvalues at 3),
// normalized so c_h(1) = 1.
std::vector<std::pair<PlusForm, Eigenform>> plus_space_eigenforms(int k, int N = 1200);

}  // namespace pim
