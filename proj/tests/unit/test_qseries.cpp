#include <doctest.h>

#include <random>

#include "pim/eisenstein.hpp"
#include "pim/qseries.hpp"

using namespace pim;

namespace {
QSeries random_series(std::mt19937& rng, int prec) {
    QSeries s(prec);
    for (int n = 0; n <= prec; ++n)
        s.set_coeff(n, Scalar(frac(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 4))));
    return s;
}
}  // namespace

TEST_CASE("product basics") {
    QSeries one_plus_q(4), one_minus_q(4);
    one_plus_q.set_coeff(0, Scalar(1));
    one_plus_q.set_coeff(1, Scalar(1));
    one_minus_q.set_coeff(0, Scalar(1));
    one_minus_q.set_coeff(1, Scalar(-1));
    QSeries prod = one_plus_q * one_minus_q;
    CHECK(prod.coeff(0) == Scalar(1));
    CHECK(prod.coeff(1) == Scalar(0));
    CHECK(prod.coeff(2) == Scalar(-1));

    // theta^2 counts lattice points of Z^2
    QSeries th(16);
    th.set_coeff(0, Scalar(1));
    for (int n = 1; n * n <= 16; ++n) th.set_coeff(n * n, Scalar(2));
    QSeries th2 = th * th;
    CHECK(th2.coeff(0) == Scalar(1));
    CHECK(th2.coeff(1) == Scalar(4));
    CHECK(th2.coeff(2) == Scalar(4));

    QSeries e4 = e1_star(4, 8);
    CHECK((e4 * e4).coeff(0) == Scalar(Rat(1, 14400)));
}

TEST_CASE("ring axioms on random truncated series") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        QSeries a = random_series(rng, 12), b = random_series(rng, 12), c = random_series(rng, 12);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("qd and dilate") {
    QSeries q = QSeries::monomial(1, 8);
    CHECK(q.qd() == q);
    CHECK(QSeries::one(8).qd() == QSeries(8));
    QSeries th(9);
    th.set_coeff(0, Scalar(1));
    th.set_coeff(1, Scalar(2));
    th.set_coeff(4, Scalar(2));
    th.set_coeff(9, Scalar(2));
    QSeries d = th.qd();
    CHECK(d.coeff(1) == Scalar(2));
    CHECK(d.coeff(4) == Scalar(8));
    CHECK(d.coeff(0) == Scalar(0));

    CHECK(QSeries::monomial(1, 3).dilate(4) == QSeries::monomial(4, 12));
    CHECK(QSeries::one(3).dilate(5).prec() == 15);
    // E*_8(4 tau) at q^4 is 2 sigma_7(1) = 2
    CHECK(e1_star(8, 3).dilate(4).coeff(4) == Scalar(2));

    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        QSeries a = random_series(rng, 10), b = random_series(rng, 10);
        int m = 2 + static_cast<int>(rng() % 3);
        CHECK((a * b).dilate(m) == a.dilate(m) * b.dilate(m));
    }
}

TEST_CASE("coords_in_span") {
    std::mt19937 rng(17);
    std::vector<QSeries> basis;
    for (int j = 0; j < 3; ++j) basis.push_back(random_series(rng, 60));

    SUBCASE("unit vector on a basis element") {
        auto x = coords_in_span(basis[0], basis, 25);
        CHECK(x[0] == Scalar(1));
        CHECK(x[1] == Scalar(0));
        CHECK(x[2] == Scalar(0));
    }
    SUBCASE("random rational combinations round-trip") {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Scalar> want;
            QSeries t(60);
            for (int j = 0; j < 3; ++j) {
                Scalar c(frac(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 3)));
                want.push_back(c);
                t = t + c * basis[j];
            }
            auto got = coords_in_span(t, basis, 25);
            CHECK(got == want);
        }
    }
    SUBCASE("rank deficiency detected") {
        std::vector<QSeries> bad{basis[0], basis[0], basis[1]};
        CHECK_THROWS_AS(coords_in_span(basis[1], bad, 25), RankDeficient);
    }
    SUBCASE("off-span target detected") {
        QSeries t = basis[0] + basis[1];
        t.set_coeff(55, t.coeff(55) + Scalar(1));
        CHECK_THROWS_AS(coords_in_span(t, basis, 20), InconsistentSystem);
    }
    SUBCASE("insufficient verification margin detected") {
        std::vector<QSeries> small;
        for (int j = 0; j < 3; ++j) small.push_back(basis[j].truncate(10));
        CHECK_THROWS_AS(coords_in_span(small[0], small, 25), InsufficientPrecision);
    }
}

#include "pim/modforms.hpp"

TEST_CASE("coordinates in a non-cusp monomial basis") {
    // Delta*E4 in the monomial basis {E4^4, E4 E6^2} of the weight-16 space
    int N = 40;
    QSeries e4 = eis_e4(N), e6 = eis_e6(N);
    std::vector<QSeries> basis{e4 * e4 * e4 * e4, e4 * e6 * e6};
    QSeries target = delta_cusp(N) * e4;
    auto x = coords_in_span(target, basis, 25);
    CHECK(x[0] == Scalar(Rat(1, 1728)));
    CHECK(x[1] == Scalar(Rat(-1, 1728)));
}

TEST_CASE("weight tags add under multiplication") {
    QSeries a = QSeries::one(4).with_weight2(8);
    QSeries b = QSeries::one(4).with_weight2(1);
    CHECK(*(a * b).weight2() == 9);
    CHECK((a + b).weight2() == std::nullopt);
}
