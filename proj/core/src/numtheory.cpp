#include "pim/numtheory.hpp"

#include <mutex>

namespace pim {

namespace {
std::vector<Rat> g_bernoulli{Rat(1)};
std::mutex g_bernoulli_mu;
}  // namespace

const Rat& bernoulli(unsigned n) {
    std::scoped_lock lk(g_bernoulli_mu);
    // sum_{j=0}^{n} C(n+1,j) B_j = 0 for n >= 1.
    while (g_bernoulli.size() <= n) {
        unsigned m = static_cast<unsigned>(g_bernoulli.size());
        Rat acc(0);
        for (unsigned j = 0; j < m; ++j) acc += Rat(binomial(m + 1, j)) * g_bernoulli[j];
        g_bernoulli.push_back(-acc / Rat(m + 1));
    }
    return g_bernoulli[n];
}

Rat bernoulli_poly(unsigned n, const Rat& x) {
    Rat acc(0), xp(1);
    for (unsigned j = 0; j <= n; ++j) {
        acc += Rat(binomial(n, n - j)) * bernoulli(n - j) * xp;
        xp *= x;
    }
    return acc;
}

Rat zeta_neg(long s) {
    if (s > 0) throw Error("zeta_neg: s must be <= 0");
    if (s == 0) return Rat(-1, 2);
    unsigned long l = static_cast<unsigned long>(1 - s);
    return -bernoulli(static_cast<unsigned>(l)) / Rat(Int(l));
}

bool is_fundamental_disc(const Int& D) {
    if (D == 1) return true;
    if (D == 0) return false;
    Int r4 = D % 4;
    if (r4 < 0) r4 += 4;
    auto [d0, s] = square_split(D);
    if (r4 == 1) return s == 1;
    if (r4 == 0) {
        Int q = D / 4;
        Int qr = q % 4;
        if (qr < 0) qr += 4;
        auto [q0, qs] = square_split(q);
        return qs == 1 && (qr == 2 || qr == 3);
    }
    return false;
}

int kronecker(const Int& D, const Int& n) {
    if (!is_fundamental_disc(D)) throw Error("kronecker: " + D.get_str() + " is not 1 or a fundamental discriminant");
    return mpz_kronecker(D.get_mpz_t(), n.get_mpz_t());
}

Rat dirichlet_L_neg(const Int& D, long s) {
    if (s > 0) throw Error("dirichlet_L_neg: s must be <= 0");
    unsigned n = static_cast<unsigned>(1 - s);
    Int aD = abs(D);
    Rat B(0);
    for (Int a = 1; a <= aD; ++a) {
        int chi = kronecker(D, a);
        if (chi == 0) continue;
        B += Rat(chi) * bernoulli_poly(n, Rat(a) / Rat(aD));
    }
    B *= Rat(pow_int(aD, n - 1));
    return -B / Rat(Int(n));
}

Rat xi_tilde_even(unsigned i) {
    if (i == 0) throw Error("xi_tilde_even: i must be >= 1");
    // Gamma_C(2i) zeta(2i) with zeta(2i) = (-1)^{i+1} B_{2i} (2pi)^{2i} / (2 (2i)!),
    // so the 2(2pi)^{-2i} Gamma(2i) prefactor cancels to (-1)^{i+1} B_{2i} / (2i).
    Rat v = bernoulli(2 * i) / Rat(Int(2 * i));
    return (i % 2 == 1) ? v : -v;
}

std::pair<Int, Int> square_split(const Int& n) {
    if (n == 0) throw Error("square_split(0)");
    Int d0 = (n < 0) ? Int(-1) : Int(1);
    Int s(1);
    Int m = abs(n);
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e & 1) d0 *= p;
        if (e >= 2) s *= pow_int(p, e / 2);
    }
    d0 *= m;
    return {d0, s};
}

std::pair<Int, Int> fundamental_split(const Int& N) {
    Int r4 = N % 4;
    if (r4 < 0) r4 += 4;
    if (N == 0 || (r4 != 0 && r4 != 1))
        throw Error("fundamental_split: " + N.get_str() + " is not 0,1 mod 4");
    auto [d0, s] = square_split(N);
    Int r = d0 % 4;
    if (r < 0) r += 4;
    Int d = (r == 1) ? d0 : 4 * d0;
    if (r != 1) {
        if (s % 2 != 0) throw Error("fundamental_split: no integral conductor for " + N.get_str());
        s /= 2;
    }
    return {d, s};
}

int hilbert(Int a, Int b, long p) {
    if (a == 0 || b == 0) throw Error("hilbert: zero argument");
    long al = ord_p(a, p), be = ord_p(b, p);
    Int u = a / pow_int(p, static_cast<unsigned>(al));
    Int v = b / pow_int(p, static_cast<unsigned>(be));
    if (p == 2) {
        auto eps = [](const Int& x) { return static_cast<int>(mpz_fdiv_ui(Int((x - 1) / 2).get_mpz_t(), 2)); };
        auto omega = [](const Int& x) { return static_cast<int>(mpz_fdiv_ui(Int((x * x - 1) / 8).get_mpz_t(), 2)); };
        int e = eps(u) * eps(v) + static_cast<int>(al % 2) * omega(v) +
                static_cast<int>(be % 2) * omega(u);
        return (e % 2 == 0) ? 1 : -1;
    }
    auto leg = [&](const Int& x) { return mpz_kronecker(x.get_mpz_t(), Int(p).get_mpz_t()); };
    int s = ((al % 2) && (be % 2) && ((p - 1) / 2) % 2) ? -1 : 1;
    if (be % 2) s *= leg(u);
    if (al % 2) s *= leg(v);
    return s;
}

std::vector<std::pair<Int, unsigned>> factor(Int n) {
    n = abs(n);
    if (n == 0) throw Error("factor(0)");
    std::vector<std::pair<Int, unsigned>> out;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Int sigma(unsigned e, const Int& m) {
    if (m <= 0) throw Error("sigma of nonpositive argument");
    Int acc(1);
    for (auto& [p, a] : factor(m)) {
        Int term(0), pe(1);
        Int pk = pow_int(p, e);
        for (unsigned j = 0; j <= a; ++j) {
            term += pe;
            pe *= pk;
        }
        acc *= term;
    }
    return acc;
}

}  // namespace pim
