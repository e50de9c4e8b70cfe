#pragma once

// Series in q (truncated at N) with Laurent polynomial coefficients in z,
// restricted to a z-exponent window [zmin, zmax]. Products drop every term
// whose z-exponent leaves the window, so the window must be chosen wide enough
// that dropped terms cannot come back into the slice being read.

#include <stdexcept>
#include <utility>
#include <vector>

#include "gfp/qseries.hpp"

namespace gfp {

struct ZWindow {
    int zmin = 0;
    int zmax = 0;

    bool contains(int z) const { return zmin <= z && z <= zmax; }
    int width() const { return zmax - zmin + 1; }
    ZWindow widened(int by) const { return {zmin - by, zmax + by}; }
    friend bool operator==(const ZWindow&, const ZWindow&) = default;
};

template <CoefficientRing R>
class BivarSeries {
public:
    BivarSeries(int n, ZWindow window, const R& zero)
        : n_(n), window_(window), zero_(RingTraits<R>::zero_like(zero)) {
        if (n < 0) throw std::invalid_argument("BivarSeries: truncation order must be >= 0");
        if (window.zmax < window.zmin) throw std::invalid_argument("BivarSeries: empty z-window");
        cells_.assign(static_cast<std::size_t>(window.width()) * (n + 1), zero_);
    }

    static BivarSeries one(int n, ZWindow window, const R& like) {
        BivarSeries s(n, window, like);
        if (window.contains(0)) s.cells_[s.index(0, 0)] = RingTraits<R>::from_int(like, 1);
        return s;
    }

    int order() const { return n_; }
    const ZWindow& window() const { return window_; }

    /// Coefficient of z^z q^e; zero outside the window or beyond N.
    const R& coeff(int z, int e) const {
        if (!window_.contains(z) || e < 0 || e > n_) return zero_;
        return cells_[index(z, e)];
    }

    /// Adds c z^z q^e, silently dropping terms outside the window or beyond N.
    void add_term(int z, int e, const R& c) {
        if (!window_.contains(z) || e < 0 || e > n_) return;
        cells_[index(z, e)] += c;
    }

    /// The z^z slice as a series in q.
    TruncSeries<R> z_slice(int z) const {
        TruncSeries<R> s(n_, zero_);
        if (!window_.contains(z)) return s;
        for (int e = 0; e <= n_; ++e) s[e] = cells_[index(z, e)];
        return s;
    }

    /// Product with the same window and the smaller truncation order.
    friend BivarSeries operator*(const BivarSeries& a, const BivarSeries& b) {
        if (!(a.window_ == b.window_)) throw std::invalid_argument("BivarSeries: window mismatch");
        const int n = std::min(a.n_, b.n_);
        BivarSeries r(n, a.window_, a.zero_);
        for (int za = a.window_.zmin; za <= a.window_.zmax; ++za) {
            for (int ea = 0; ea <= n; ++ea) {
                const R& ca = a.cells_[a.index(za, ea)];
                if (RingTraits<R>::is_zero(ca)) continue;
                for (int zb = b.window_.zmin; zb <= b.window_.zmax; ++zb) {
                    if (!r.window_.contains(za + zb)) continue;
                    for (int eb = 0; ea + eb <= n; ++eb) {
                        const R& cb = b.cells_[b.index(zb, eb)];
                        if (RingTraits<R>::is_zero(cb)) continue;
                        r.cells_[r.index(za + zb, ea + eb)] += ca * cb;
                    }
                }
            }
        }
        return r;
    }

    BivarSeries& operator*=(const BivarSeries& o) { return *this = *this * o; }

    /// Multiplies in place by a sparse factor sum c_t z^{z_t} q^{e_t}.
    struct Term {
        int z;
        int e;
        R c;
    };
    void multiply_sparse(const std::vector<Term>& factor) {
        std::vector<R> out(cells_.size(), zero_);
        for (int z = window_.zmin; z <= window_.zmax; ++z) {
            for (int e = 0; e <= n_; ++e) {
                const R& c = cells_[index(z, e)];
                if (RingTraits<R>::is_zero(c)) continue;
                for (const auto& t : factor) {
                    const int zz = z + t.z;
                    const int ee = e + t.e;
                    if (ee > n_ || !window_.contains(zz)) continue;
                    out[index(zz, ee)] += c * t.c;
                }
            }
        }
        cells_ = std::move(out);
    }

    /// Restriction to a sub-window.
    BivarSeries clipped(ZWindow w) const {
        BivarSeries r(n_, w, zero_);
        for (int z = std::max(w.zmin, window_.zmin); z <= std::min(w.zmax, window_.zmax); ++z)
            for (int e = 0; e <= n_; ++e) r.cells_[r.index(z, e)] = cells_[index(z, e)];
        return r;
    }

    friend bool operator==(const BivarSeries& a, const BivarSeries& b) {
        return a.n_ == b.n_ && a.window_ == b.window_ && a.cells_ == b.cells_;
    }

private:
    std::size_t index(int z, int e) const {
        return static_cast<std::size_t>(z - window_.zmin) * (n_ + 1) + e;
    }

    int n_;
    ZWindow window_;
    R zero_;
    std::vector<R> cells_;
};

using IntBivarSeries = BivarSeries<BigInt>;

struct JacobiTripleSides {
    IntBivarSeries product;  // prod_{n>=1} (1-q^n)(1+z q^n)(1+z^{-1} q^{n-1})
    IntBivarSeries sum;      // sum_m z^m q^{m(m+1)/2}
};

/// Both sides of the triple product identity in the form
///   prod_{n>=1} (1-q^n)(1+z q^n)(1+z^{-1} q^{n-1}) = sum_m z^m q^{m(m+1)/2},
/// truncated at q^N and restricted to `window`. The product side is expanded
/// on a window padded by N+1, which no term can cross and come back from.
JacobiTripleSides jacobi_triple(int N, ZWindow window);

}  // namespace gfp
