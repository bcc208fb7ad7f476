#include "pim/modforms.hpp"

#include <algorithm>

#include "pim/eisenstein.hpp"
#include "pim/numtheory.hpp"

namespace pim {

Eigenform Eigenform::galois_conj() const {
    Eigenform g;
    g.weight = weight;
    g.field_d = field_d;
    QSeries s(q.prec());
    for (int n = 0; n <= q.prec(); ++n) s.set_coeff(n, q.coeff(n).conj());
    g.q = std::move(s);
    return g;
}

PlusForm::PlusForm(int k_, QSeries q_) : k(k_), q(std::move(q_)) {
    int sign = (k % 2 == 0) ? 1 : -1;
    for (int m = 0; m <= q.prec(); ++m) {
        if (q.coeff(m).is_zero()) continue;
        int r = ((sign * m) % 4 + 4) % 4;
        if (r != 0 && r != 1)
            throw Error("PlusForm: support violation at q^" + std::to_string(m));
    }
}

int dim_sk(int k) {
    if (k < 12 || k % 2 != 0) return 0;
    int r = k % 12;
    int d = k / 12;
    return (r == 2) ? d - 1 : d;
}

QSeries eis_e4(int N) {
    QSeries e = QSeries::one(N);
    for (int n = 1; n <= N; ++n) e.set_coeff(n, Scalar(Rat(240 * sigma(3, n))));
    return e.with_weight2(8);
}

QSeries eis_e6(int N) {
    QSeries e = QSeries::one(N);
    for (int n = 1; n <= N; ++n) e.set_coeff(n, Scalar(Rat(-504 * sigma(5, n))));
    return e.with_weight2(12);
}

QSeries delta_cusp(int N) {
    QSeries e4 = eis_e4(N), e6 = eis_e6(N);
    QSeries num = e4 * e4 * e4 - e6 * e6;
    return (Scalar(Rat(1, 1728)) * num).with_weight2(24);
}

std::vector<QSeries> sk_basis(int k, int N) {
    if (k % 2 != 0 || k < 12) throw Error("sk_basis: weight must be even >= 12");
    int w = k - 12;
    QSeries d = delta_cusp(N);
    QSeries e4 = eis_e4(N), e6 = eis_e6(N);
    std::vector<QSeries> basis;
    for (int b = 0; 6 * b <= w; ++b) {
        if ((w - 6 * b) % 4 != 0) continue;
        int a = (w - 6 * b) / 4;
        QSeries m = d;
        for (int i = 0; i < a; ++i) m = m * e4;
        for (int i = 0; i < b; ++i) m = m * e6;
        basis.push_back(m.with_weight2(2 * k));
    }
    if (static_cast<int>(basis.size()) != dim_sk(k))
        throw Error("sk_basis: dimension mismatch at k=" + std::to_string(k));
    return basis;
}

QSeries hecke_Tp(int k, long p, const QSeries& a) {
    int M = a.prec() / static_cast<int>(p);
    if (M < 1) throw InsufficientPrecision("hecke_Tp needs precision >= p");
    Int pk = pow_int(p, static_cast<unsigned>(k - 1));
    QSeries r(M);
    for (int n = 0; n <= M; ++n) {
        Scalar v = a.coeff(n * static_cast<int>(p));
        if (n % p == 0) v += Scalar(Rat(pk)) * a.coeff(n / static_cast<int>(p));
        r.set_coeff(n, v);
    }
    return r.with_weight2(a.weight2() ? *a.weight2() : 2 * k);
}

std::vector<Eigenform> eigenforms(int k, int N) {
    int d = dim_sk(k);
    if (d == 0) return {};
    auto basis = sk_basis(k, N);
    if (d == 1) {
        Eigenform f;
        f.weight = k;
        f.field_d = 0;
        Scalar lead = basis[0].coeff(1);
        f.q = lead.inverse() * basis[0];
        return {f};
    }
    if (d != 2) throw Error("eigenforms: only dim <= 2 Hecke fields supported");

    // Matrix of T(2) on the basis, then eigen-split the quadratic field.
    std::vector<Scalar> M(4);
    for (int j = 0; j < 2; ++j) {
        QSeries img = hecke_Tp(k, 2, basis[j]);
        auto x = coords_in_span(img, basis, 25);
        M[j] = x[0];      // (0,j)
        M[2 + j] = x[1];  // (1,j)
    }
    Rat tr = M[0].rat() + M[3].rat();
    Rat det = (M[0] * M[3] - M[1] * M[2]).rat();
    Rat disc = tr * tr - 4 * det;
    if (disc == 0) throw Error("eigenforms: repeated T(2) eigenvalue");
    Int dn = to_int(disc * Rat(disc.get_den()) * Rat(disc.get_den()));  // disc * den^2
    auto [d0, s] = square_split(dn);
    if (d0 < 0) throw Error("eigenforms: negative Hecke-field discriminant");
    Rat sq = Rat(s) / Rat(disc.get_den());  // disc = d0 * sq^2

    std::vector<Eigenform> out;
    for (int branch = 0; branch < 2; ++branch) {
        Scalar theta;  // eigenvalue of T(2)
        if (d0 == 1) {
            theta = Scalar((tr + (branch == 0 ? sq : -sq)) / 2);
        } else {
            theta = Scalar(tr / 2, (branch == 0 ? sq : -sq) / 2, d0.get_si());
        }
        // eigenvector (v0, v1): (M - theta) v = 0
        Scalar a = M[0] - theta, b = M[1];
        Scalar v0, v1;
        if (!b.is_zero() || !a.is_zero()) {
            v0 = b;
            v1 = -a;
            if (v0.is_zero() && v1.is_zero()) throw Error("eigenforms: zero eigenvector");
        } else {
            v0 = M[3] - theta;
            v1 = -M[2];
        }
        QSeries f = v0 * basis[0] + v1 * basis[1];
        Scalar lead = f.coeff(1);
        if (lead.is_zero()) throw Error("eigenforms: eigenform with c(1)=0");
        Eigenform e;
        e.weight = k;
        e.field_d = (d0 == 1) ? 0 : d0.get_si();
        e.q = lead.inverse() * f;
        out.push_back(std::move(e));
    }
    // +lambda branch first.
    if (out[0].q.coeff(2).sqrt_part() < out[1].q.coeff(2).sqrt_part()) std::swap(out[0], out[1]);
    return out;
}

QSeries theta_series(int N) {
    QSeries t(N);
    t.set_coeff(0, Scalar(1));
    for (long n = 1; n * n <= N; ++n) t.set_coeff(static_cast<int>(n * n), Scalar(2));
    return t.with_weight2(1);
}

QSeries delta_l(int l, int N) {
    if (l < 6 || l % 2 != 0) throw Error("delta_l: l must be even >= 6");
    int Ne = N / 4 + 1;
    QSeries E = e1_star(l - 2, Ne);
    QSeries E4 = E.dilate(4).truncate(N);
    QSeries dE4 = E.qd().dilate(4).truncate(N);  // (dE*/dtau)(4 tau), up to 2 pi i
    QSeries th = theta_series(N);
    QSeries dth = th.qd();
    QSeries out = Scalar(Rat(1, 4)) * (Scalar(Rat(l / 2 - 1)) * (E4 * dth) - th * dE4);
    return out.with_weight2(2 * l + 1);
}

QSeries plus_hecke_Tp2(int k, long p, const QSeries& h) {
    if (p % 2 == 0) throw Error("plus_hecke_Tp2: p must be odd");
    long p2 = p * p;
    int M = h.prec() / static_cast<int>(p2);
    if (M < 1) throw InsufficientPrecision("plus_hecke_Tp2 needs precision >= p^2");
    Int pk1 = pow_int(p, static_cast<unsigned>(k - 1));
    Int p2k1 = pow_int(p, static_cast<unsigned>(2 * k - 1));
    int sign = (k % 2 == 0) ? 1 : -1;
    QSeries r(M);
    for (long n = 0; n <= M; ++n) {
        Scalar v = h.coeff(static_cast<int>(n * p2));
        int chi = mpz_kronecker(Int(sign * n).get_mpz_t(), Int(p).get_mpz_t());
        if (chi != 0) v += Scalar(Rat(chi) * Rat(pk1)) * h.coeff(static_cast<int>(n));
        if (n % p2 == 0) v += Scalar(Rat(p2k1)) * h.coeff(static_cast<int>(n / p2));
        r.set_coeff(static_cast<int>(n), v);
    }
    return r;
}

std::vector<std::pair<PlusForm, Eigenform>> plus_space_eigenforms(int k, int N) {
    if (k != 10 && k != 14) throw Error("plus_space_eigenforms: supported cases are k=10,14");
    std::vector<QSeries> basis;
    if (k == 10) {
        basis.push_back(delta_l(10, N));
    } else {
        int Ne = N / 4 + 1;
        basis.push_back(delta_l(6, N) * e1_star(8, Ne).dilate(4).truncate(N));
        basis.push_back(delta_l(8, N) * e1_star(6, Ne).dilate(4).truncate(N));
    }
    auto fs = eigenforms(2 * k, std::max(64, N / 9));
    if (fs.size() != basis.size())
        throw Error("plus_space_eigenforms: dim S+_{k+1/2} != dim S_{2k}");

    std::vector<std::pair<PlusForm, Eigenform>> out;
    if (basis.size() == 1) {
        Scalar lead = basis[0].coeff(1);
        QSeries h = lead.inverse() * basis[0];
        // Shimura compatibility at p=3 doubles as the pairing check.
        auto t9 = plus_hecke_Tp2(k, 3, h);
        auto ev = coords_in_span(t9, {h}, 25);
        if (!(ev[0] == fs[0].coeff(3)))
            throw Error("plus_space_eigenforms: T(9) eigenvalue does not match c_f(3)");
        out.emplace_back(PlusForm(k, std::move(h)), fs[0]);
        return out;
    }

    // Diagonalize T(9) on the 2-dimensional space by matching eigenvalues
    // against the Shimura side.
    std::vector<Scalar> M(4);
    for (int j = 0; j < 2; ++j) {
        QSeries img = plus_hecke_Tp2(k, 3, basis[j]);
        auto x = coords_in_span(img, basis, 25);
        M[j] = x[0];
        M[2 + j] = x[1];
    }
    for (const auto& f : fs) {
        Scalar theta = f.coeff(3);
        Scalar a = M[0] - theta, b = M[1];
        Scalar v0 = b, v1 = -a;
        if (v0.is_zero() && v1.is_zero()) {
            v0 = M[3] - theta;
            v1 = -M[2];
        }
        QSeries h = v0 * basis[0] + v1 * basis[1];
        // (M - theta) v must really vanish: verify on the second row too.
        if (!((M[2] * v0 + (M[3] - theta) * v1).is_zero()))
            throw Error("plus_space_eigenforms: no plus-space eigenvalue matches c_f(3)");
        Scalar lead = h.coeff(1);
        if (lead.is_zero()) throw Error("plus_space_eigenforms: c_h(1) = 0");
        h = lead.inverse() * h;
        auto t9 = plus_hecke_Tp2(k, 3, h);
        auto check = coords_in_span(t9, {h}, 25);
        if (!(check[0] == theta))
            throw Error("plus_space_eigenforms: eigen-split verification failed");
        out.emplace_back(PlusForm(k, std::move(h)), f);
    }
    return out;
}

}  // namespace pim
