#pragma once

// Test-only reference computations. Nothing here calls into the library's
// algorithms; only the value types are shared.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "gfp/exactring.hpp"

namespace oracle {

using gfp::BigInt;
using Poly = std::vector<BigInt>;

inline Poly poly(std::initializer_list<long> c) { return Poly(c.begin(), c.end()); }

inline Poly one(int N) {
    Poly p(N + 1, BigInt(0));
    p[0] = 1;
    return p;
}

// schoolbook product truncated at q^N
inline Poly mul(const Poly& a, const Poly& b, int N) {
    Poly r(N + 1, BigInt(0));
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= N; ++i)
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= N; ++j) r[i + j] += a[i] * b[j];
    return r;
}

// 1 / (1 - c q^d) = sum_t c^t q^{dt}
inline Poly geometric(long c, int d, int N) {
    Poly r(N + 1, BigInt(0));
    BigInt p = 1;
    for (int e = 0; e <= N; e += d) {
        r[e] = p;
        p *= c;
        if (d == 0) break;
    }
    return r;
}

// prod_{n>=1} (1 + s q^{pn-r})^e, factor by factor
inline Poly factor_product(int s, int p, int r, int e, int N) {
    Poly res = one(N);
    for (int n = 1; p * n - r <= N; ++n) {
        const int d = p * n - r;
        Poly f(N + 1, BigInt(0));
        if (e > 0) {
            f[0] = 1;
            f[d] += s;
            if (d == 0) f[0] = 1 + s;
        } else {
            f = geometric(-s, d, N);
        }
        for (int t = 0; t < (e > 0 ? e : -e); ++t) res = mul(res, f, N);
    }
    return res;
}

inline std::vector<long> as_longs(const Poly& p) {
    std::vector<long> out;
    for (const auto& c : p) out.push_back(c.get_si());
    return out;
}

// --------------------------------------------------------------------------
// Brute-force array counting.
//
// Rows are generated as nonincreasing sequences of (value, color) pairs under
// a cost budget, one part at a time, rejecting a part as soon as the row
// would break its multiplicity rule.

struct Pair {
    int value;
    int color;
};

inline void rows(bool colored, int k, int shift, int budget, int max_len, std::vector<Pair>& cur, int cost,
                 std::map<std::pair<int, int>, long>& out) {
    out[{static_cast<int>(cur.size()), cost}] += 1;
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int v = budget; v >= 0; --v) {
        if (cost + v + shift > budget) continue;
        for (int c = colored ? k : 0; c >= (colored ? 1 : 0); --c) {
            if (!cur.empty()) {
                const Pair& last = cur.back();
                if (v > last.value) continue;
                if (colored && v == last.value && c >= last.color) continue;
            }
            if (!colored) {
                int same = 0;
                for (const auto& p : cur) same += p.value == v;
                if (same >= k) continue;
            }
            cur.push_back({v, c});
            rows(colored, k, shift, budget, max_len, cur, cost + v + shift, out);
            cur.pop_back();
        }
    }
}

inline long count_arrays(bool colored, int k, int alpha, int n) {
    std::map<std::pair<int, int>, long> top, bottom;
    std::vector<Pair> cur;
    const int max_len = n + (alpha < 0 ? -alpha : alpha) + k + 1;
    rows(colored, k, 1, n, max_len, cur, 0, top);
    rows(colored, k, 0, n, max_len, cur, 0, bottom);
    long total = 0;
    for (const auto& [key, ct] : top) {
        auto it = bottom.find({key.first - alpha, n - key.second});
        if (it != bottom.end()) total += ct * it->second;
    }
    return total;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline BigInt random_big(int limbs = 3) {
    BigInt r = 0;
    for (int i = 0; i < limbs; ++i) {
        r <<= 32;
        r += static_cast<unsigned long>(uniform(0, 0xffffffffL));
    }
    return uniform(0, 1) ? r : BigInt(-r);
}

}  // namespace oracle
