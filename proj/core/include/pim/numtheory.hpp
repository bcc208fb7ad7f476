#pragma once

#include <utility>
#include <vector>

#include "pim/rational.hpp"

namespace pim {

// Bernoulli number B_n in the B_1 = -1/2 convention (so zeta(0) = -1/2 and the
// generalized-Bernoulli formulas below come out right).  Memoized, exact.
const Rat& bernoulli(unsigned n);

// Bernoulli polynomial B_n(x) = sum_j C(n,j) B_j x^{n-j}.
Rat bernoulli_poly(unsigned n, const Rat& x);

// zeta(s) at s = 0 or s = 1-l, l >= 2: exact rational value of the
// analytically continued Riemann zeta function.  Throws for s > 0.
Rat zeta_neg(long s);

// Kronecker symbol (D/n) for D a fundamental discriminant or 1.
int kronecker(const Int& D, const Int& n);

// D == 1, or D == 1 mod 4 squarefree, or D == 0 mod 4 with D/4 == 2,3 mod 4 squarefree.
bool is_fundamental_disc(const Int& D);

// L(s, chi_D) at s = 1-n <= 0, via -B_{n,chi}/n with
// B_{n,chi} = |D|^{n-1} sum_{a=1}^{|D|} chi(a) B_n(a/|D|).
// D = 1 is the principal character and reproduces zeta_neg.
Rat dirichlet_L_neg(const Int& D, long s);

// xi~(2i) = Gamma_C(2i) zeta(2i), an exact rational: (-1)^{i+1} B_{2i} / (2i).
Rat xi_tilde_even(unsigned i);

// n = d0 * s^2 with d0 squarefree (sign carried by d0).  Trial division.
std::pair<Int, Int> square_split(const Int& n);

// N = d * f^2 with d a fundamental discriminant (or 1) and f > 0.
// Requires N == 0,1 mod 4, N != 0.
std::pair<Int, Int> fundamental_split(const Int& N);

// Hilbert symbol (a, b)_p for nonzero integers at a finite prime p.
int hilbert(Int a, Int b, long p);

// Ascending prime factorization [(p, e), ...] by trial division.
std::vector<std::pair<Int, unsigned>> factor(Int n);

// Divisor power sum sigma_e(m), m >= 1.
Int sigma(unsigned e, const Int& m);

}  // namespace pim
