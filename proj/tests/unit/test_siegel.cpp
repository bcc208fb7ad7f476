#include <doctest.h>

#include "pim/numtheory.hpp"
#include "pim/siegel_series.hpp"

using namespace pim;

namespace {
HalfIntMat paper_4x4_f2() {
    // [[A, r/2],[tr/2, 1]] with r = (0,0,1): d = 1, f = 2
    IntMat t(4, 4);
    long e[16] = {2, 0, 1, 0, 0, 2, 1, 0, 1, 1, 2, 1, 0, 0, 1, 2};
    for (int i = 0; i < 16; ++i) t.at(i / 4, i % 4) = e[i];
    return HalfIntMat::from_twoB(std::move(t));
}

HalfIntMat diag_form(std::initializer_list<long> bs) {
    int m = static_cast<int>(bs.size());
    IntMat t(m, m);
    int i = 0;
    for (long b : bs) t.at(i, i) = 2 * b, ++i;
    return HalfIntMat::from_twoB(std::move(t));
}

std::vector<Int> gamma_times_F(const SiegelPoly& F, int xi, int order) {
    auto g = gamma_series(F.p, F.m, xi, order);
    std::vector<Int> out(static_cast<size_t>(order) + 1, Int(0));
    for (int j = 0; j <= order; ++j)
        for (int i = 0; i <= j; ++i)
            if (j - i <= F.degree()) out[j] += g[i] * F.c[j - i];
    return out;
}

int xi_of(const HalfIntMat& B, long p) {
    auto [Bt, m] = B.reduce_nondegenerate();
    return (m % 2 == 0 && m > 0) ? xi_p(Bt, p) : 0;
}
}  // namespace

TEST_CASE("gamma series") {
    // m=1: (1-X)
    auto g1 = gamma_series(2, 1, 0, 3);
    CHECK(g1 == std::vector<Int>{1, -1, 0, 0});
    // m=2, xi=0: (1-X)(1-p^2 X^2)
    auto g2 = gamma_series(2, 2, 0, 3);
    CHECK(g2 == std::vector<Int>{1, -1, -4, 4});
    // m=2, xi=1: gamma_1 = -1 + p
    auto g3 = gamma_series(3, 2, 1, 2);
    CHECK(g3[1] == 2);
    // m=4, xi=1 at p=2: gamma_1 = -1 + 4 = 3
    auto g4 = gamma_series(2, 4, 1, 1);
    CHECK(g4[1] == 3);
}

TEST_CASE("stratum sums") {
    CHECK(stratum_sum_rank1(HalfIntMat::identity(1), 2) == -1);
    CHECK(stratum_sum_rank1(paper_4x4_f2(), 2) == -9);
    // 1_6 at p=3: 364 lines, each -1 or +2
    HalfIntMat id6 = HalfIntMat::identity(6);
    Int s = stratum_sum_rank1(id6, 3);
    // brute line count check: value determined below by engine consistency
    CHECK((s.get_si() + 364) % 3 == 0);

    CHECK(stratum_sum_level2(HalfIntMat::identity(1), 2) == 0);
    // deg F = 0 cases: [X^2] b = [X^2] gamma
    HalfIntMat d11 = diag_form({1, 1});
    auto g = gamma_series(2, 2, xi_of(d11, 2), 2);
    CHECK(stratum_sum_level2(d11, 2) == g[2]);
}

TEST_CASE("brute_bp basics") {
    auto b1 = brute_bp(HalfIntMat::identity(1), 2, 2);
    CHECK(b1 == std::vector<Int>{1, -1, 0});
    // b_2((2)) = (1-X)(1+2X) truncated
    auto b2 = brute_bp(HalfIntMat::scalar_form(Int(2)), 2, 2);
    CHECK(b2 == std::vector<Int>{1, 1, -2});
}

TEST_CASE("fp_polynomial: printed and closed-form values") {
    SUBCASE("deg 0") {
        auto F = fp_polynomial(HalfIntMat::identity(2), 3);
        CHECK(F.degree() == 0);
        CHECK(F.c[0] == 1);
    }
    SUBCASE("the 4x4 with d=1, f=2 at p=2") {
        auto F = fp_polynomial(paper_4x4_f2(), 2);
        CHECK(F.c == std::vector<Int>{1, -12, 32});
        CHECK(F.derivation[1] == SiegelPoly::Step::stratum1);
        CHECK(F.derivation[2] == SiegelPoly::Step::functional_eq);
    }
    SUBCASE("scalar forms: F_p((p^e), X) = sum (pX)^j") {
        auto F4 = fp_polynomial(HalfIntMat::scalar_form(Int(4)), 2);
        CHECK(F4.c == std::vector<Int>{1, 2, 4});
        auto F2 = fp_polynomial(HalfIntMat::scalar_form(Int(2)), 2);
        CHECK(F2.c == std::vector<Int>{1, 2});
        auto F9 = fp_polynomial(HalfIntMat::scalar_form(Int(9)), 3);
        CHECK(F9.c == std::vector<Int>{1, 3, 9});
        auto F32 = fp_polynomial(HalfIntMat::scalar_form(Int(32)), 2);  // deg 5
        CHECK(F32.c == std::vector<Int>{1, 2, 4, 8, 16, 32});
        for (long m0 = 1; m0 <= 48; ++m0) {
            auto F = fp_polynomial(HalfIntMat::scalar_form(Int(m0)), 2);
            long e = ord_p(Int(m0), 2);
            CHECK(F.degree() == e);
            for (long j = 0; j <= e; ++j) CHECK(F.c[j] == pow_int(2, j));
        }
    }
    SUBCASE("functional equation holds for every produced polynomial") {
        for (long b = 1; b <= 32; ++b) {
            for (long p : {2L, 3L}) {
                auto F = fp_polynomial(HalfIntMat::scalar_form(Int(b)), p);
                int d = F.degree();
                CHECK(F.c[0] == 1);
                for (int j = 0; j <= d; ++j) {
                    // c_{d-j} = p^{(m+1)(d-2j)/2} c_j, m = 1
                    long e = d - 2 * j;
                    if (e < 0) continue;
                    CHECK(F.c[d - j] == pow_int(p, static_cast<unsigned>(e)) * F.c[j]);
                }
            }
        }
    }
}

TEST_CASE("engine equals the definitional oracle") {
    // all pd B with m <= 2, small entries, p in {2,3}
    int tested = 0;
    for (long a = 1; a <= 4; ++a)
        for (long c = 1; c <= 4; ++c)
            for (long b = 0; b * b <= 4 * a * c; ++b) {
                IntMat t(2, 2);
                t.at(0, 0) = 2 * a;
                t.at(1, 1) = 2 * c;
                t.at(0, 1) = t.at(1, 0) = b;
                HalfIntMat B = HalfIntMat::from_twoB(std::move(t));
                if (!B.is_pd()) continue;
                for (long p : {2L, 3L}) {
                    auto F = fp_polynomial(B, p);
                    auto brute = brute_bp(B, p, 2);
                    auto prod = gamma_times_F(F, xi_of(B, p), 2);
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(c);
                    CAPTURE(p);
                    CHECK(prod[0] == brute[0]);
                    CHECK(prod[1] == brute[1]);
                    CHECK(prod[2] == brute[2]);
                    ++tested;
                }
            }
    CHECK(tested >= 60);

    // m = 3 spot checks, both parities of the det
    for (auto bs : {std::initializer_list<long>{1, 1, 1}, {1, 1, 2}, {1, 2, 3}, {2, 2, 2}}) {
        HalfIntMat B = diag_form(bs);
        for (long p : {2L, 3L}) {
            auto F = fp_polynomial(B, p);
            auto brute = brute_bp(B, p, 2);
            auto prod = gamma_times_F(F, 0, 2);
            CHECK(prod[0] == brute[0]);
            CHECK(prod[1] == brute[1]);
            CHECK(prod[2] == brute[2]);
        }
    }
}

TEST_CASE("stratum level2 agrees with brute at mixed forms") {
    for (auto bs : {std::initializer_list<long>{1, 4}, {2, 8}, {1, 8}, {3, 9}}) {
        HalfIntMat B = diag_form(bs);
        for (long p : {2L, 3L}) {
            auto brute = brute_bp(B, p, 2);
            CHECK(stratum_sum_level2(B, p) == brute[2]);
            CHECK(stratum_sum_rank1(B, p) == brute[1]);
        }
    }
}

TEST_CASE("functional-equation sign at odd rank") {
    // the unit ternary form at p=2: deg 2, eps = -1, so F = 1 - 16 X^2
    auto F111 = fp_polynomial(HalfIntMat::identity(3), 2);
    CHECK(F111.c == std::vector<Int>{1, 0, -16});
    CHECK(fe_sign(HalfIntMat::identity(3), 2) == -1);

    // the pinned 3x3 matrix A: deg 1 at p=2 with eps = -1, F = 1 - 4X
    IntMat t(3, 3);
    long e[9] = {2, 0, 1, 0, 2, 1, 1, 1, 2};
    for (int i = 0; i < 9; ++i) t.at(i / 3, i % 3) = e[i];
    HalfIntMat A = HalfIntMat::from_twoB(std::move(t));
    CHECK(fe_sign(A, 2) == -1);
    CHECK(fp_polynomial(A, 2).c == std::vector<Int>{1, -4});

    // scalar forms always have sign +1
    for (long b : {2L, 4L, 8L, 3L, 9L})
        for (long p : {2L, 3L}) CHECK(fe_sign(HalfIntMat::scalar_form(Int(b)), p) == 1);

    // deep sweep: rank-3 diagonal forms, deconvolved from the definitional
    // enumeration through [X^min(d,L)], against the solver
    for (long a = 1; a <= 2; ++a)
        for (long b = a; b <= 4; ++b)
            for (long c = b; c <= 8; ++c) {
                HalfIntMat B = diag_form({a, b, c});
                for (long p : {2L, 3L}) {
                    int d = fp_degree(B, p);
                    if (d == 0 || d > 5) continue;
                    int L = std::min(d, p == 2 ? 3 : 2);
                    auto brute = brute_bp(B, p, L);
                    auto F = fp_polynomial(B, p);
                    auto prod = gamma_times_F(F, 0, L);
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(c);
                    CAPTURE(p);
                    for (int j = 0; j <= L; ++j) CHECK(prod[j] == brute[j]);
                }
            }
    // level-4 enumeration on representatives of degrees 4 and 5
    for (auto bs : {std::initializer_list<long>{1, 2, 2}, {2, 2, 2}}) {
        HalfIntMat B = diag_form(bs);
        auto brute = brute_bp(B, 2, 4);
        auto prod = gamma_times_F(fp_polynomial(B, 2), 0, 4);
        for (int j = 0; j <= 4; ++j) CHECK(prod[j] == brute[j]);
    }

    // even rank keeps sign +1 through degree 4: m=2 forms with f divisible
    // by p^2, enumerated to level 4
    for (auto bs : {std::initializer_list<long>{1, 16}, {2, 8}, {4, 4}, {1, 9}}) {
        HalfIntMat B = diag_form(bs);
        for (long p : {2L, 3L}) {
            int d = fp_degree(B, p);
            if (d < 3) continue;
            int L = std::min(d, 4);
            auto brute = brute_bp(B, p, L);
            auto F = fp_polynomial(B, p);
            auto [Bt, m] = B.reduce_nondegenerate();
            auto prod = gamma_times_F(F, xi_p(Bt, p), L);
            for (int j = 0; j <= L; ++j) CHECK(prod[j] == brute[j]);
        }
    }

    // rank-5 deg-2 form (the D4+A1 root lattice): the solver's internal [X^2]
    // stratum check cross-validates the sign formula at m=5, p=2
    IntMat d4(5, 5);
    long cart[25] = {2, -1, -1, -1, 0, -1, 2, 0, 0, 0, -1, 0, 2, 0, 0,
                     -1, 0, 0, 2, 0, 0, 0, 0, 0, 2};
    for (int i = 0; i < 25; ++i) d4.at(i / 5, i % 5) = cart[i];
    HalfIntMat B5 = HalfIntMat::from_twoB(std::move(d4));
    CHECK(B5.det_twoB() == 8);
    auto F5 = fp_polynomial(B5, 2);
    CHECK(F5.degree() == 2);
    CHECK(F5.c[2] == Int(fe_sign(B5, 2)) * 64);
}

TEST_CASE("alpha evaluation feeds the printed local factor") {
    auto F = fp_polynomial(paper_4x4_f2(), 2);
    Scalar ap(Rat(456));
    AlphaElem val = fp_evaluate_alpha(F, 10, 1, ap);
    AlphaElem beta = AlphaElem::beta(2, 10, ap);
    AlphaElem betabar = AlphaElem::constant(ap, 2, 10, ap) - beta;
    CHECK(alpha_symmetrize(betabar * val) == Scalar(Rat(456 - 512 * 3)));
}

TEST_CASE("unsupported sizes and degrees abort loudly") {
    CHECK_THROWS_AS(fp_polynomial(HalfIntMat::scalar_form(Int(64)), 2), DegreeUnsupported);
    CHECK_THROWS_AS(stratum_sum_level2(HalfIntMat::identity(6), 2), SizeUnsupported);
    CHECK_THROWS_AS(brute_bp(HalfIntMat::identity(4), 5, 2), BudgetExceeded);
}

TEST_CASE("fp_evaluate") {
    auto F = fp_polynomial(paper_4x4_f2(), 2);
    // F(2^t) at t=0: 1 - 12 + 32
    CHECK(fp_evaluate(F, 0) == Rat(21));
    // genus-1 products over p reproduce sigma_{l-1}
    for (long m0 : {6L, 12L, 45L, 48L}) {
        for (int l : {4, 8}) {
            Rat prod(2);
            for (auto& [p, e] : factor(Int(m0)))
                prod *= fp_evaluate(fp_polynomial(HalfIntMat::scalar_form(Int(m0)), p.get_si()),
                                    l - 2);
            CHECK(prod == Rat(2 * sigma(static_cast<unsigned>(l - 1), Int(m0))));
        }
    }
}
