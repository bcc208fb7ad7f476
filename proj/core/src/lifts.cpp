#include "pim/lifts.hpp"

#include "pim/numtheory.hpp"
#include "pim/qform_enum.hpp"
#include "pim/siegel_series.hpp"

namespace pim {

LiftContext::LiftContext(int k_, PlusForm h_, Eigenform f_)
    : k(k_), h(std::move(h_)), f(std::move(f_)) {
    if (h.k != k || f.weight != 2 * k) throw Error("LiftContext: weight mismatch");
}

Scalar ikeda_fc(const HalfIntMat& T, const LiftContext& ctx) {
    if (T.size() != 4) throw Error("ikeda_fc: T must be 4x4 (n = 1)");
    if (!T.is_pd()) throw NotPSD("ikeda_fc");
    auto [d, f] = T.disc_split();  // (-1)^{n+1} det(2T) = det(2T) = d f^2
    Int ad = abs(d);
    Scalar acc = ctx.h.q.coeff(static_cast<int>(ad.get_si()));
    for (auto& [p, e] : factor(f)) {
        long pl = p.get_si();
        Scalar ap = ctx.f.ap(pl);
        SiegelPoly F = fp_polynomial(T, pl);
        // f_T^{k-1/2} alpha_p^{-ord} = (a_p - beta)^{ord}; beta' = a_p - beta.
        AlphaElem beta = AlphaElem::beta(pl, static_cast<unsigned>(ctx.k), ap);
        AlphaElem betabar = AlphaElem::constant(ap, pl, static_cast<unsigned>(ctx.k), ap) - beta;
        AlphaElem local = betabar.pow(e) * fp_evaluate_alpha(F, static_cast<unsigned>(ctx.k), 1, ap);
        acc *= alpha_symmetrize(local);
    }
    return acc;
}

Scalar miyawaki_fc(const HalfIntMat& A, const LiftContext& ctx) {
    if (A.size() != 3) throw Error("miyawaki_fc: A must be 3x3");
    if (!A.is_pd()) throw NotPSD("miyawaki_fc");
    if (dim_sk(ctx.k + 2) != 1)
        throw Error("miyawaki_fc: dim S_{k+2}(SL_2(Z)) != 1, single-term restriction invalid");
    HalfIntMat one = HalfIntMat::identity(1);
    Scalar acc(0);
    for (const auto& r : enumerate_R_block(A, one)) {
        HalfIntMat T = HalfIntMat::block(A, r, one);
        if (!T.is_pd()) continue;  // singular blocks carry no cusp-form coefficient
        acc += ikeda_fc(T, ctx);
    }
    return acc;
}

}  // namespace pim
