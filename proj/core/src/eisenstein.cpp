#include "pim/eisenstein.hpp"

#include <map>
#include <mutex>

#include "pim/numtheory.hpp"
#include "pim/siegel_series.hpp"

namespace pim {

EisensteinSpec::EisensteinSpec(int genus_, int l_) : genus(genus_), l(l_) {
    if (genus != 1 && (genus % 2 != 0 || genus < 2 || genus > 6))
        throw Error("EisensteinSpec: genus must be 1 or even <= 6");
    if (l % 2 != 0 || l < 4) throw Error("EisensteinSpec: weight must be even >= 4");
    if (genus > 1) {
        int n = genus / 2;
        if (l < n + 1) throw Error("EisensteinSpec: weight below genus bound");
        if (l == n + 1 && l % 4 == 2)
            throw Error("EisensteinSpec: E*_{" + std::to_string(genus) + "," + std::to_string(l) +
                        "} is not holomorphic (l = n+1 == 2 mod 4)");
    }
}

Rat z_norm(int n, int l) {
    if (l < 2 || l % 2 != 0) throw Error("z_norm: l must be even >= 2");
    Rat z = zeta_neg(1 - l);
    for (int i = 1; i <= n / 2; ++i) z *= zeta_neg(1 + 2 * i - 2 * l);
    return z;
}

namespace {
std::map<std::pair<std::string, long>, Rat> g_fc_cache;
std::mutex g_fc_mu;
}  // namespace

Rat fc_even_genus(const HalfIntMat& B, int l) {
    if (B.size() % 2 != 0) throw Error("fc_even_genus: genus must be even");
    int n = B.size() / 2;
    EisensteinSpec spec(B.size(), l);  // validates (l, genus)

    auto [Bt, m] = B.reduce_nondegenerate();

    std::string key = Bt.class_key() + "|g" + std::to_string(B.size()) + "|l" + std::to_string(l);
    {
        std::scoped_lock lk(g_fc_mu);
        auto it = g_fc_cache.find({key, 0});
        if (it != g_fc_cache.end()) return it->second;
    }

    Rat c;
    if (m == 0) {
        c = zeta_neg(1 - l);
        for (int i = 1; i <= n; ++i) c *= zeta_neg(1 + 2 * i - 2 * l);
    } else {
        c = Rat(pow_int(2, static_cast<unsigned>((m + 1) / 2)));
        for (auto& [p, e] : factor(Bt.det_twoB())) {
            SiegelPoly F = fp_polynomial(Bt, p.get_si());
            c *= fp_evaluate(F, l - m - 1);
        }
        if (m % 2 == 0) {
            for (int i = m / 2 + 1; i <= n; ++i) c *= zeta_neg(1 + 2 * i - 2 * l);
            auto [d, f] = Bt.disc_split();
            c *= dirichlet_L_neg(d, 1 + m / 2 - l);
        } else {
            for (int i = (m + 1) / 2; i <= n; ++i) c *= zeta_neg(1 + 2 * i - 2 * l);
        }
    }
    std::scoped_lock lk(g_fc_mu);
    return g_fc_cache.emplace(std::make_pair(std::move(key), 0L), std::move(c)).first->second;
}

QSeries e1_star(int l, int N) {
    if (l < 4 || l % 2 != 0)
        throw Error("e1_star: weight " + std::to_string(l) + " unsupported (E*_2 is not holomorphic)");
    QSeries E(N);
    E.set_coeff(0, Scalar(zeta_neg(1 - l)));
    for (int n = 1; n <= N; ++n)
        E.set_coeff(n, Scalar(Rat(2 * sigma(static_cast<unsigned>(l - 1), n))));
    return E.with_weight2(2 * l);
}

}  // namespace pim
