#include "pim/halfint_mat.hpp"

#include <algorithm>
#include <sstream>

#include "pim/numtheory.hpp"

namespace pim {

Int det_bareiss(IntMat m) {
    if (m.rows != m.cols) throw Error("det of non-square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

void smith_normal_form(const IntMat& A, IntMat& U, IntMat& S, IntMat& V) {
    S = A;
    U = IntMat::identity(A.rows);
    V = IntMat::identity(A.cols);
    int n = std::min(S.rows, S.cols);

    auto row_op = [&](int i, int j, const Int& f) {  // row_i -= f*row_j
        for (int c = 0; c < S.cols; ++c) S.at(i, c) -= f * S.at(j, c);
        for (int c = 0; c < U.cols; ++c) U.at(i, c) -= f * U.at(j, c);
    };
    auto col_op = [&](int i, int j, const Int& f) {  // col_i -= f*col_j
        for (int r = 0; r < S.rows; ++r) S.at(r, i) -= f * S.at(r, j);
        for (int r = 0; r < V.rows; ++r) V.at(r, i) -= f * V.at(r, j);
    };
    auto row_swap = [&](int i, int j) {
        for (int c = 0; c < S.cols; ++c) std::swap(S.at(i, c), S.at(j, c));
        for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < S.rows; ++r) std::swap(S.at(r, i), S.at(r, j));
        for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
    };

    for (int k = 0; k < n; ++k) {
        for (;;) {
            // Smallest nonzero entry of the trailing block into the pivot.
            int bi = -1, bj = -1;
            for (int i = k; i < S.rows; ++i)
                for (int j = k; j < S.cols; ++j)
                    if (S.at(i, j) != 0 &&
                        (bi < 0 ||
                         mpz_cmpabs(S.at(i, j).get_mpz_t(), S.at(bi, bj).get_mpz_t()) < 0)) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0) goto done;
            if (bi != k) row_swap(bi, k);
            if (bj != k) col_swap(bj, k);

            bool clean = true;
            for (int i = k + 1; i < S.rows; ++i)
                if (S.at(i, k) != 0) {
                    Int f;
                    mpz_fdiv_q(f.get_mpz_t(), S.at(i, k).get_mpz_t(), S.at(k, k).get_mpz_t());
                    row_op(i, k, f);
                    clean = false;
                }
            for (int j = k + 1; j < S.cols; ++j)
                if (S.at(k, j) != 0) {
                    Int f;
                    mpz_fdiv_q(f.get_mpz_t(), S.at(k, j).get_mpz_t(), S.at(k, k).get_mpz_t());
                    col_op(j, k, f);
                    clean = false;
                }
            if (!clean) continue;

            // Pivot must divide the rest of the block.
            bool divides = true;
            for (int i = k + 1; i < S.rows && divides; ++i)
                for (int j = k + 1; j < S.cols && divides; ++j)
                    if (S.at(i, j) % S.at(k, k) != 0) {
                        row_op(k, i, Int(-1));  // fold row i into the pivot row
                        divides = false;
                    }
            if (divides) break;
        }
        if (S.at(k, k) < 0) {
            for (int c = 0; c < S.cols; ++c) S.at(k, c) = -S.at(k, c);
            for (int c = 0; c < U.cols; ++c) U.at(k, c) = -U.at(k, c);
        }
    }
done:;
}

HalfIntMat HalfIntMat::from_twoB(IntMat twoB) {
    if (twoB.rows != twoB.cols) throw Error("HalfIntMat: not square");
    for (int i = 0; i < twoB.rows; ++i) {
        if (twoB.at(i, i) % 2 != 0) throw Error("HalfIntMat: odd diagonal entry in 2B");
        for (int j = 0; j < i; ++j)
            if (twoB.at(i, j) != twoB.at(j, i)) throw Error("HalfIntMat: not symmetric");
    }
    return HalfIntMat(std::move(twoB));
}

HalfIntMat HalfIntMat::zero(int m) { return HalfIntMat(IntMat(m, m)); }

HalfIntMat HalfIntMat::scalar_form(const Int& b) {
    IntMat t(1, 1);
    t.at(0, 0) = 2 * b;
    return HalfIntMat(std::move(t));
}

HalfIntMat HalfIntMat::identity(int m) {
    IntMat t(m, m);
    for (int i = 0; i < m; ++i) t.at(i, i) = 2;
    return HalfIntMat(std::move(t));
}

HalfIntMat HalfIntMat::block(const HalfIntMat& A1, const IntMat& R, const HalfIntMat& A2) {
    int n1 = A1.size(), n2 = A2.size();
    if (R.rows != n1 || R.cols != n2) throw Error("block: R has wrong shape");
    IntMat t(n1 + n2, n1 + n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) t.at(i, j) = A1.twoB(i, j);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) t.at(n1 + i, n1 + j) = A2.twoB(i, j);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) t.at(i, n1 + j) = t.at(n1 + j, i) = R.at(i, j);
    return HalfIntMat(std::move(t));
}

Int HalfIntMat::det_twoB() const { return det_bareiss(t_); }

int HalfIntMat::rank() const {
    IntMat U, S, V;
    smith_normal_form(t_, U, S, V);
    int r = 0;
    for (int i = 0; i < m_; ++i)
        if (S.at(i, i) != 0) ++r;
    return r;
}

namespace {
// Every principal minor of a symmetric psd matrix is >= 0, and conversely.
bool psd_by_minors(const IntMat& t) {
    int m = t.rows;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        IntMat sub(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < idx.size(); ++j) sub.at(i, j) = t.at(idx[i], idx[j]);
        if (det_bareiss(sub) < 0) return false;
    }
    return true;
}
}  // namespace

bool HalfIntMat::is_psd() const { return psd_by_minors(t_); }

bool HalfIntMat::is_pd() const {
    // Sylvester: leading principal minors > 0.
    for (int k = 1; k <= m_; ++k) {
        IntMat sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = t_.at(i, j);
        if (det_bareiss(sub) <= 0) return false;
    }
    return m_ > 0;
}

Int HalfIntMat::qform(std::span<const long> x) const {
    if (static_cast<int>(x.size()) != m_) throw Error("qform: wrong vector length");
    Int acc(0);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) acc += t_.at(i, j) * Int(x[i]) * Int(x[j]);
    if (acc % 2 != 0) throw Error("qform: odd txt(2B)x");
    return acc / 2;
}

HalfIntMat HalfIntMat::transform(const IntMat& U) const {
    IntMat r = U.transpose() * t_ * U;
    return from_twoB(std::move(r));
}

HalfIntMat HalfIntMat::principal_block(const std::vector<int>& idx) const {
    IntMat sub(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) sub.at(i, j) = t_.at(idx[i], idx[j]);
    return HalfIntMat(std::move(sub));
}

std::pair<HalfIntMat, int> HalfIntMat::reduce_nondegenerate() const {
    if (!is_psd()) throw NotPSD("reduce_nondegenerate");
    IntMat U, S, V;
    smith_normal_form(t_, U, S, V);
    std::vector<int> keep;
    for (int i = 0; i < m_; ++i)
        if (S.at(i, i) != 0) keep.push_back(i);
    int r = static_cast<int>(keep.size());
    // 2B = U^{-1} S V^{-1}; ker(2B) = V * span{e_i : s_i = 0}, so the columns
    // of V at the nonzero indices complete a basis adapted to the kernel.
    IntMat C(m_, r);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < r; ++j) C.at(i, j) = V.at(i, keep[j]);
    IntMat rt = C.transpose() * t_ * C;
    HalfIntMat tilde = from_twoB(std::move(rt));
    if (r > 0 && !tilde.is_pd()) throw Error("reduce_nondegenerate: reduced part not pd");
    return {tilde, r};
}

std::vector<Int> HalfIntMat::rational_diagonal() const {
    int m = m_;
    std::vector<std::vector<Rat>> M(m, std::vector<Rat>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) M[i][j] = entry(i, j);
    std::vector<Int> out;
    for (int k = 0; k < m; ++k) {
        int piv = -1;
        for (int i = k; i < m; ++i)
            if (M[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            // bring a nonzero off-diagonal entry onto the diagonal
            int a = -1, b = -1;
            for (int i = k; i < m && a < 0; ++i)
                for (int j = i + 1; j < m && a < 0; ++j)
                    if (M[i][j] != 0) {
                        a = i;
                        b = j;
                    }
            if (a < 0) throw Error("rational_diagonal: degenerate form");
            for (int j = k; j < m; ++j) M[a][j] += M[b][j];
            for (int i = k; i < m; ++i) M[i][a] += M[i][b];
            piv = a;
        }
        if (piv != k) {
            std::swap(M[piv], M[k]);
            for (int i = k; i < m; ++i) std::swap(M[i][piv], M[i][k]);
        }
        Rat d = M[k][k];
        for (int i = k + 1; i < m; ++i) {
            Rat f = M[i][k] / d;
            for (int j = k; j < m; ++j) M[i][j] -= f * M[k][j];
        }
        for (int j = k + 1; j < m; ++j) M[k][j] = 0;
        auto [sf, sq] = square_split(d.get_num() * d.get_den());
        out.push_back(sf);
    }
    return out;
}

std::pair<Int, Int> HalfIntMat::disc_split() const {
    if (m_ % 2 != 0) throw Error("disc_split: odd rank");
    Int N = det_twoB();
    if (m_ % 4 == 2) N = -N;
    auto [d, f] = fundamental_split(N);
    if (d * f * f != N) throw Error("disc_split: reconstruction failed");
    return {d, f};
}

namespace {
// col_i -= q col_j followed by the matching row operation (congruence by
// I - q E_{ji}); keeps the Gram matrix symmetric.
void colop_sym(IntMat& t, int i, int j, const Int& q) {
    int m = t.rows;
    for (int c = 0; c < m; ++c) t.at(i, c) -= q * t.at(j, c);
    for (int c = 0; c < m; ++c) t.at(c, i) -= q * t.at(c, j);
}

void negate_sym(IntMat& t, int i) {
    int m = t.rows;
    for (int c = 0; c < m; ++c) t.at(i, c) = -t.at(i, c);
    for (int c = 0; c < m; ++c) t.at(c, i) = -t.at(c, i);
}

void swap_sym(IntMat& t, int i, int j) {
    int m = t.rows;
    for (int c = 0; c < m; ++c) std::swap(t.at(i, c), t.at(j, c));
    for (int c = 0; c < m; ++c) std::swap(t.at(c, i), t.at(c, j));
}
}  // namespace

std::string HalfIntMat::class_key() const {
    IntMat t = t_;
    int m = m_;
    // Greedy Minkowski-style size reduction; caching aid only, so a bounded
    // deterministic pass count is enough.
    for (int pass = 0; pass < 32; ++pass) {
        bool changed = false;
        for (int j = 0; j < m; ++j) {
            if (t.at(j, j) <= 0) continue;
            for (int i = 0; i < m; ++i) {
                if (i == j) continue;
                Int num = t.at(i, j), den = t.at(j, j);
                Int q;  // nearest integer to num/den
                mpz_fdiv_q(q.get_mpz_t(), Int(2 * num + den).get_mpz_t(), Int(2 * den).get_mpz_t());
                if (q == 0) continue;
                colop_sym(t, i, j, q);
                changed = true;
            }
        }
        // Ascending diagonal, lexicographic tie-break on rows.
        for (int i = 0; i + 1 < m; ++i) {
            int best = i;
            for (int j = i + 1; j < m; ++j) {
                if (t.at(j, j) < t.at(best, best)) best = j;
            }
            if (best != i) {
                swap_sym(t, i, best);
                changed = true;
            }
        }
        // First nonzero off-diagonal entry of each column made nonnegative.
        for (int i = 1; i < m; ++i) {
            for (int j = 0; j < i; ++j) {
                if (t.at(j, i) != 0) {
                    if (t.at(j, i) < 0) {
                        negate_sym(t, i);
                        changed = true;
                    }
                    break;
                }
            }
        }
        if (!changed) break;
    }
    std::ostringstream os;
    os << m << ":";
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) os << t.at(i, j).get_str() << ",";
    return os.str();
}

}  // namespace pim
