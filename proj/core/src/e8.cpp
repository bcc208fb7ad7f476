#include "pim/e8.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

namespace pim {

namespace {

using Vec8 = std::array<int8_t, 8>;

// E8 in the even coordinate model, doubled coordinates y = 2x: y integral,
// all entries of one parity, sum(y) = 0 mod 4, |y|^2 = 8t for norm x.x = 2t.
void enumerate_rec(int pos, long rem, int parity, long sum, Vec8& cur, std::vector<Vec8>& out) {
    if (pos == 8) {
        if (rem == 0 && ((sum % 4) + 4) % 4 == 0) out.push_back(cur);
        return;
    }
    long start = (parity == 0) ? 0 : 1;
    for (long v = start; v * v <= rem; v += 2) {
        cur[pos] = static_cast<int8_t>(v);
        enumerate_rec(pos + 1, rem - v * v, parity, sum + v, cur, out);
        if (v != 0) {
            cur[pos] = static_cast<int8_t>(-v);
            enumerate_rec(pos + 1, rem - v * v, parity, sum - v, cur, out);
        }
    }
}

const std::vector<Vec8>& vectors_of_norm(long t) {
    static std::map<long, std::vector<Vec8>> cache;
    static std::mutex mu;
    std::scoped_lock lk(mu);
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    std::vector<Vec8> out;
    Vec8 cur{};
    enumerate_rec(0, 8 * t, 0, 0, cur, out);  // all even
    enumerate_rec(0, 8 * t, 1, 0, cur, out);  // all odd
    return cache.emplace(t, std::move(out)).first->second;
}

// histogram of v1.v2 over pairs with |v1|^2 = 2t1, |v2|^2 = 2t2
const std::map<long, Int>& dot_histogram(long t1, long t2) {
    static std::map<std::pair<long, long>, std::map<long, Int>> cache;
    static std::mutex mu;
    std::scoped_lock lk(mu);
    auto key = std::make_pair(t1, t2);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const auto& L1 = vectors_of_norm(t1);
    const auto& L2 = vectors_of_norm(t2);
    std::map<long, long> counts;
    for (const auto& a : L1)
        for (const auto& b : L2) {
            long dot = 0;
            for (int i = 0; i < 8; ++i) dot += static_cast<long>(a[i]) * b[i];
            ++counts[dot / 4];  // y1.y2 = 4 v1.v2
        }
    std::map<long, Int> out;
    for (auto& [d, c] : counts) out[d] = c;
    return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

Int e8_pair_count(const HalfIntMat& T, int n) {
    if (n != 1 && n != 2) throw Error("e8_pair_count: n must be 1 or 2");
    if (T.size() != n) throw Error("e8_pair_count: T has wrong size");
    if (!T.is_psd()) throw NotPSD("e8_pair_count");
    if (n == 1) {
        long t = static_cast<long>(T.twoB(0, 0).get_si() / 2);
        return Int(static_cast<long>(vectors_of_norm(t).size()));
    }
    long t1 = static_cast<long>(T.twoB(0, 0).get_si() / 2);
    long t2 = static_cast<long>(T.twoB(1, 1).get_si() / 2);
    long s = T.twoB(0, 1).get_si();  // v1.v2
    if (t1 == 0 && t2 == 0) return s == 0 ? 1 : 0;
    if (t1 == 0) return s == 0 ? Int(static_cast<long>(vectors_of_norm(t2).size())) : Int(0);
    if (t2 == 0) return s == 0 ? Int(static_cast<long>(vectors_of_norm(t1).size())) : Int(0);
    const auto& hist = dot_histogram(t1, t2);
    auto it = hist.find(s);
    return it == hist.end() ? Int(0) : it->second;
}

}  // namespace pim
