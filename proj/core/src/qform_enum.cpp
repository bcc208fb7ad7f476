#include "pim/qform_enum.hpp"

#include <array>
#include <cmath>
#include <cstdint>

namespace pim {

namespace {

int64_t det_bareiss_i64(std::array<int64_t, 64>& m, int n) {
    if (n == 0) return 1;
    int64_t prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k * n + k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i * n + k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
        prev = m[k * n + k];
    }
    return sign * m[(n - 1) * n + (n - 1)];
}

int64_t principal_minor(const std::vector<long>& t, int m, unsigned mask) {
    std::array<int64_t, 64> sub{};
    int idx[8], k = 0;
    for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) idx[k++] = i;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub[i * k + j] = t[idx[i] * m + idx[j]];
    return det_bareiss_i64(sub, k);
}

}  // namespace

bool psd_small(const std::vector<long>& twoB, int m) {
    for (unsigned mask = 1; mask < (1u << m); ++mask)
        if (principal_minor(twoB, m, mask) < 0) return false;
    return true;
}

bool pd_small(const std::vector<long>& twoB, int m) {
    unsigned mask = 0;
    for (int k = 0; k < m; ++k) {
        mask |= 1u << k;
        if (principal_minor(twoB, m, mask) <= 0) return false;
    }
    return m > 0;
}

std::vector<IntMat> enumerate_R_block(const HalfIntMat& A1, const HalfIntMat& A2) {
    int n1 = A1.size(), n2 = A2.size();
    if (!A1.is_pd() || !A2.is_pd()) throw Error("enumerate_R_block: blocks must be pd");

    std::vector<long> t1(static_cast<size_t>(n1) * n1), t2(static_cast<size_t>(n2) * n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) t1[i * n1 + j] = A1.twoB(i, j).get_si();
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) t2[i * n2 + j] = A2.twoB(i, j).get_si();

    // Candidate columns c_j: [[A1, c/2],[tc/2, (A2)_jj]] psd.
    std::vector<std::vector<std::vector<long>>> cols(n2);
    for (int j = 0; j < n2; ++j) {
        std::vector<long> bound(n1);
        for (int i = 0; i < n1; ++i)
            bound[i] = static_cast<long>(
                std::floor(std::sqrt(static_cast<double>(t1[i * n1 + i] * t2[j * n2 + j])) + 1e-9));
        std::vector<long> c(n1, 0);
        int mm = n1 + 1;
        std::vector<long> blk(static_cast<size_t>(mm) * mm);
        for (int a = 0; a < n1; ++a)
            for (int b = 0; b < n1; ++b) blk[a * mm + b] = t1[a * n1 + b];
        blk[n1 * mm + n1] = t2[j * n2 + j];
        // odometer over the box
        for (int i = 0; i < n1; ++i) c[i] = -bound[i];
        for (;;) {
            for (int a = 0; a < n1; ++a) blk[a * mm + n1] = blk[n1 * mm + a] = c[a];
            if (psd_small(blk, mm)) cols[j].push_back(c);
            int i = 0;
            while (i < n1 && c[i] == bound[i]) c[i++] = -bound[i];
            if (i == n1) break;
            ++c[i];
        }
    }

    // Assemble columns, checking the growing principal block each time.
    std::vector<IntMat> out;
    int m = n1 + n2;
    std::vector<long> blk(static_cast<size_t>(m) * m);
    std::vector<size_t> pick(n2, 0);
    std::vector<const std::vector<long>*> chosen(n2, nullptr);

    auto fill_block = [&](int upto) {  // columns 0..upto of R placed; block size n1+upto+1
        int mm = n1 + upto + 1;
        for (int a = 0; a < n1; ++a)
            for (int b = 0; b < n1; ++b) blk[a * mm + b] = t1[a * n1 + b];
        for (int a = 0; a <= upto; ++a)
            for (int b = 0; b <= upto; ++b) blk[(n1 + a) * mm + (n1 + b)] = t2[a * n2 + b];
        for (int jj = 0; jj <= upto; ++jj)
            for (int a = 0; a < n1; ++a)
                blk[a * mm + (n1 + jj)] = blk[(n1 + jj) * mm + a] = (*chosen[jj])[a];
        return mm;
    };

    // depth-first over columns with early psd pruning
    std::vector<size_t> stack_idx(n2, 0);
    int depth = 0;
    while (depth >= 0) {
        if (stack_idx[depth] == cols[depth].size()) {
            stack_idx[depth] = 0;
            --depth;
            if (depth >= 0) ++stack_idx[depth];
            continue;
        }
        chosen[depth] = &cols[depth][stack_idx[depth]];
        int mm = fill_block(depth);
        std::vector<long> sub(blk.begin(), blk.begin() + static_cast<size_t>(mm) * mm);
        if (!psd_small(sub, mm)) {
            ++stack_idx[depth];
            continue;
        }
        if (depth == n2 - 1) {
            IntMat R(n1, n2);
            for (int j = 0; j < n2; ++j)
                for (int i = 0; i < n1; ++i) R.at(i, j) = (*chosen[j])[i];
            out.push_back(std::move(R));
            ++stack_idx[depth];
        } else {
            ++depth;
        }
    }
    return out;
}

}  // namespace pim
