#include <doctest.h>

#include "pim/modforms.hpp"
#include "pim/numtheory.hpp"

using namespace pim;

TEST_CASE("dimensions and bases") {
    CHECK(dim_sk(10) == 0);
    CHECK(dim_sk(12) == 1);
    CHECK(dim_sk(14) == 0);
    CHECK(dim_sk(16) == 1);
    CHECK(dim_sk(20) == 1);
    CHECK(dim_sk(26) == 1);
    CHECK(dim_sk(28) == 2);
    for (int k : {12, 16, 18, 20, 22, 26, 28}) CHECK(sk_basis(k, 24).size() == static_cast<size_t>(dim_sk(k)));
}

TEST_CASE("delta and Hecke action") {
    QSeries d = delta_cusp(16);
    CHECK(d.coeff(0) == Scalar(0));
    CHECK(d.coeff(1) == Scalar(1));
    CHECK(d.coeff(2) == Scalar(-24));
    CHECK(d.coeff(3) == Scalar(252));
    CHECK(d.coeff(4) == Scalar(-1472));

    QSeries t2 = hecke_Tp(12, 2, d);
    auto x = coords_in_span(t2, {d.truncate(t2.prec())}, 5);
    CHECK(x[0] == Scalar(-24));

    // constant-multiple invariance
    QSeries s = Scalar(Rat(7)) * d;
    auto y = coords_in_span(hecke_Tp(12, 2, s), {s.truncate(8)}, 5);
    CHECK(y[0] == Scalar(-24));
}

TEST_CASE("eigenforms") {
    auto f20 = eigenforms(20, 40);
    REQUIRE(f20.size() == 1);
    CHECK(f20[0].coeff(1) == Scalar(1));
    CHECK(f20[0].coeff(2) == Scalar(456));

    auto f28 = eigenforms(28, 60);
    REQUIRE(f28.size() == 2);
    CHECK(f28[0].field_d == 18209);
    // T(2) characteristic polynomial X^2 + 8280 X - 195250176
    Scalar a = f28[0].coeff(2), b = f28[1].coeff(2);
    CHECK(a + b == Scalar(-8280));
    CHECK(a * b == Scalar(-195250176));
    CHECK(a == Scalar(Rat(-4140), Rat(108), 18209));  // +lambda branch first
    CHECK(f28[0].galois_conj().coeff(2) == b);

    SUBCASE("multiplicativity and prime-power recursion on the stored range") {
        for (const auto& f : {f20[0], f28[0], f28[1]}) {
            int N = f.q.prec();
            for (long m = 2; m <= N; ++m)
                for (long n = 2; m * n <= N; ++n) {
                    Int g;
                    mpz_gcd(g.get_mpz_t(), Int(m).get_mpz_t(), Int(n).get_mpz_t());
                    if (g == 1) CHECK(f.coeff(m * n) == f.coeff(m) * f.coeff(n));
                }
            for (long p : {2L, 3L, 5L, 7L}) {
                Scalar pk(Rat(pow_int(p, static_cast<unsigned>(f.weight - 1))));
                for (long q = p * p; q <= N; q *= p)
                    CHECK(f.coeff(q) == f.coeff(p) * f.coeff(q / p) - pk * f.coeff(q / (p * p)));
            }
        }
    }
}

TEST_CASE("theta and delta_l") {
    QSeries th = theta_series(12);
    CHECK(th.coeff(0) == Scalar(1));
    CHECK(th.coeff(1) == Scalar(2));
    CHECK(th.coeff(4) == Scalar(2));
    CHECK(th.coeff(9) == Scalar(2));
    CHECK(th.coeff(2) == Scalar(0));

    // the normalized weight-21/2 form: q - 56q^4 + 360q^5 - 13680q^8
    QSeries d10 = delta_l(10, 64);
    Scalar lead = d10.coeff(1);
    QSeries h = lead.inverse() * d10;
    CHECK(h.coeff(1) == Scalar(1));
    CHECK(h.coeff(4) == Scalar(-56));
    CHECK(h.coeff(5) == Scalar(360));
    CHECK(h.coeff(8) == Scalar(-13680));
    CHECK(h.coeff(2) == Scalar(0));
    CHECK(h.coeff(3) == Scalar(0));

    // plus-space support for several l
    for (int l : {6, 8, 10}) CHECK_NOTHROW(PlusForm(l, delta_l(l, 64)));
}

TEST_CASE("plus space eigenforms and Shimura matching") {
    SUBCASE("k = 10") {
        auto pairs = plus_space_eigenforms(10, 400);
        REQUIRE(pairs.size() == 1);
        const auto& [h, f] = pairs[0];
        CHECK(h.q.coeff(1) == Scalar(1));
        CHECK(h.q.coeff(4) == Scalar(-56));
        CHECK(h.q.coeff(5) == Scalar(360));
        CHECK(h.q.coeff(8) == Scalar(-13680));
        CHECK(f.coeff(2) == Scalar(456));
    }
    SUBCASE("k = 14") {
        auto pairs = plus_space_eigenforms(14, 400);
        REQUIRE(pairs.size() == 2);
        const auto& [hp, fp] = pairs[0];
        const auto& [hm, fm] = pairs[1];
        CHECK(fp.coeff(2) == Scalar(Rat(-4140), Rat(108), 18209));
        CHECK(hp.q.coeff(1) == Scalar(1));
        CHECK(hp.q.coeff(4) == Scalar(Rat(-12332), Rat(108), 18209));
        CHECK(hp.q.coeff(5) == Scalar(Rat(123360), Rat(-1080), 18209));
        CHECK(hp.q.coeff(8) == Scalar(Rat(1126824), Rat(-10152), 18209));
        // Galois: lambda -> -lambda swaps the pair coefficient-wise
        for (int n : {1, 4, 5, 8, 9, 12}) CHECK(hm.q.coeff(n) == hp.q.coeff(n).conj());
        for (int n = 1; n <= 20; ++n) CHECK(fm.coeff(n) == fp.coeff(n).conj());
    }
}
