#pragma once

// Truncated formal power series in q over an exact coefficient ring.
//
// A TruncSeries of order N holds the coefficients of q^0..q^N inclusive and
// says nothing about higher powers. Binary operations on series of different
// orders yield a result of the smaller order.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gfp/exactring.hpp"

namespace gfp {

/// Raised by inverse() when the constant term is not a unit of the ring.
class NonUnitConstant : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

template <CoefficientRing R>
class TruncSeries {
public:
    using coefficient_type = R;

    /// The zero series of order n; `zero` fixes the ring (modulus, order).
    TruncSeries(int n, const R& zero) : coeffs_(checked_length(n), RingTraits<R>::zero_like(zero)) {}

    /// Takes ownership of q^0..q^{size-1}; size must be >= 1.
    explicit TruncSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: needs at least one coefficient");
    }

    static TruncSeries one(int n, const R& like) {
        TruncSeries s(n, like);
        s.coeffs_[0] = RingTraits<R>::from_int(like, 1);
        return s;
    }

    /// c * q^e, or zero when e > n.
    static TruncSeries monomial(int n, int e, const R& c) {
        TruncSeries s(n, c);
        if (e < 0) throw std::invalid_argument("TruncSeries::monomial: negative exponent");
        if (e <= n) s.coeffs_[e] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const R& operator[](int i) const { return coeffs_.at(i); }
    R& operator[](int i) { return coeffs_.at(i); }
    const std::vector<R>& coeffs() const { return coeffs_; }
    const R& zero_element() const { return coeffs_[0]; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const R& c) { return RingTraits<R>::is_zero(c); });
    }

    /// Drops everything above q^n (n <= order()).
    TruncSeries truncated(int n) const {
        if (n < 0 || n > order()) throw std::invalid_argument("TruncSeries::truncated: bad order");
        return TruncSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + n + 1));
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        shrink_to(o.order());
        for (int i = 0; i <= order(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    TruncSeries& operator-=(const TruncSeries& o) {
        shrink_to(o.order());
        for (int i = 0; i <= order(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    TruncSeries operator-() const {
        TruncSeries r(order(), coeffs_[0]);
        for (int i = 0; i <= order(); ++i) r.coeffs_[i] -= coeffs_[i];
        return r;
    }

    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        const int n = std::min(a.order(), b.order());
        TruncSeries r(n, a.coeffs_[0]);
        for (int i = 0; i <= n; ++i) {
            if (RingTraits<R>::is_zero(a.coeffs_[i])) continue;
            for (int j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    /// Coefficient-wise scaling by a ring element.
    friend TruncSeries operator*(const R& c, TruncSeries a) {
        for (auto& x : a.coeffs_) x = R(c * x);
        return a;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    static std::size_t checked_length(int n) {
        if (n < 0) throw std::invalid_argument("TruncSeries: truncation order must be >= 0");
        return static_cast<std::size_t>(n) + 1;
    }

    void shrink_to(int n) {
        if (n < order()) coeffs_.resize(static_cast<std::size_t>(n) + 1, coeffs_[0]);
    }

    std::vector<R> coeffs_;
};

using IntSeries = TruncSeries<BigInt>;

template <CoefficientRing R>
TruncSeries<R> ps_add(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    return a + b;
}

template <CoefficientRing R>
TruncSeries<R> ps_mul(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    return a * b;
}

/// Multiplicative inverse up to q^N; the constant term must be a unit.
template <CoefficientRing R>
TruncSeries<R> ps_inv(const TruncSeries<R>& a) {
    auto c0_inv = RingTraits<R>::unit_inverse(a[0]);
    if (!c0_inv) throw NonUnitConstant("ps_inv: constant term is not a unit");
    const int n = a.order();
    TruncSeries<R> r(n, a[0]);
    r[0] = *c0_inv;
    for (int i = 1; i <= n; ++i) {
        R acc = RingTraits<R>::zero_like(a[0]);
        for (int j = 1; j <= i; ++j) {
            if (!RingTraits<R>::is_zero(a[j])) acc += a[j] * r[i - j];
        }
        r[i] = R(-(*c0_inv * acc));
    }
    return r;
}

template <CoefficientRing R>
TruncSeries<R> ps_pow(const TruncSeries<R>& a, unsigned e) {
    TruncSeries<R> result = TruncSeries<R>::one(a.order(), a[0]);
    TruncSeries<R> base = a;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

/// Series whose n-th coefficient is a[step*n + offset], for every
/// step*n + offset <= a.order(). Requires offset <= a.order().
template <CoefficientRing R>
TruncSeries<R> ps_extract_progression(const TruncSeries<R>& a, int step, int offset) {
    if (step < 1 || offset < 0 || offset >= step)
        throw std::invalid_argument("ps_extract_progression: need step >= 1 and 0 <= offset < step");
    if (offset > a.order())
        throw std::invalid_argument("ps_extract_progression: offset beyond truncation");
    std::vector<R> out;
    for (int i = offset; i <= a.order(); i += step) out.push_back(a[i]);
    return TruncSeries<R>(std::move(out));
}

/// Applies a ring map coefficient-wise (e.g. reduction mod m, embedding into Z[zeta]).
template <CoefficientRing S, CoefficientRing R, class F>
TruncSeries<S> ps_map(const TruncSeries<R>& a, F&& f) {
    std::vector<S> out;
    out.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) out.push_back(std::invoke(f, c));
    return TruncSeries<S>(std::move(out));
}

TruncSeries<ModInt> reduce_mod(const IntSeries& a, std::int64_t modulus);
TruncSeries<CycInt> embed_cyclotomic(const IntSeries& a, int order);

/// Smallest index where the two series differ within their common order, or
/// -1 when they agree.
template <CoefficientRing R>
int first_difference(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    const int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
        if (!(a[i] == b[i])) return i;
    return -1;
}

IntSeries int_series(std::initializer_list<long> coeffs);

// ---------------------------------------------------------------------------
// Classical builders over the integers.

/// prod_{n>=1} (1 - q^n) to order N.
IntSeries euler_product(int N);

/// sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2} to order N.
IntSeries euler_cube(int N);

/// prod_{n>=1} (1 + sign q^{period n - residue})^exponent, handled in place.
/// Used where a single factor is needed without going through ProductSpec.
IntSeries single_factor_product(int sign, int period, int residue, int exponent, int N);

// ---------------------------------------------------------------------------
// JSON-friendly rendering: exact decimal strings, lowest power first.

template <CoefficientRing R>
std::vector<std::string> coefficient_strings(const TruncSeries<R>& a) {
    std::vector<std::string> out;
    out.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) out.push_back(RingTraits<R>::to_string(c));
    return out;
}

}  // namespace gfp
