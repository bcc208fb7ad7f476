#pragma once

#include "pim/halfint_mat.hpp"
#include "pim/qseries.hpp"

namespace pim {

// Validated parameters of a normalized Siegel Eisenstein series E*_{g,l}:
// genus 1 or even <= 6, l even, l >= g/2 + 1 for even genus, and the
// non-holomorphic case l = g/2 + 1 == 2 mod 4 rejected.
struct EisensteinSpec {
    int genus;
    int l;
    EisensteinSpec(int genus_, int l_);
};

// Z(n, l) = zeta(1-l) prod_{i=1}^{[n/2]} zeta(1+2i-2l); n is the genus.
Rat z_norm(int n, int l);

// Fourier coefficient c_{2n,l}(B) of E*_{2n,l} for psd B of even genus 2n:
// 2^{[(m+1)/2]} prod_{p | det(2Bt)} F*_p(B, p^{l-m-1}) times the zeta/L tail,
// split on the parity of m = rank(B).
Rat fc_even_genus(const HalfIntMat& B, int l);

// Genus-1 normalized Eisenstein series: zeta(1-l) + 2 sum sigma_{l-1}(n) q^n.
QSeries e1_star(int l, int N);

}  // namespace pim
