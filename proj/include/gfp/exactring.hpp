#pragma once

// Exact coefficient rings: big integers, integers mod m, and cyclotomic
// integers Z[zeta_n] = Z[x]/Phi_n(x) in the power basis.

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gfp {

using BigInt = mpz_class;

/// Raised when two ring elements from different rings (different modulus,
/// different cyclotomic order) meet in one operation.
class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// ModInt

class ModInt {
public:
    ModInt(std::int64_t value, std::int64_t modulus);
    static ModInt reduce(const BigInt& value, std::int64_t modulus);

    std::int64_t residue() const { return residue_; }
    std::int64_t modulus() const { return modulus_; }

    ModInt& operator+=(const ModInt& o);
    ModInt& operator-=(const ModInt& o);
    ModInt& operator*=(const ModInt& o);
    ModInt operator-() const;

    /// Multiplicative inverse when gcd(residue, modulus) = 1.
    std::optional<ModInt> inverse() const;

    friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
    friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
    friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }
    friend bool operator==(const ModInt&, const ModInt&) = default;

private:
    void check_same_ring(const ModInt& o) const;

    std::int64_t residue_;
    std::int64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const ModInt& a);

// ---------------------------------------------------------------------------
// CycInt

/// Euler's totient.
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree
/// first. Computed once per order and cached; safe to call concurrently.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

/// An element of Z[zeta_n], zeta_n a primitive n-th root of unity, stored as
/// its unique representative of degree < phi(n) modulo Phi_n(x).
class CycInt {
public:
    /// Builds the element sum coeffs[i] zeta^i. Accepts any number of
    /// coefficients; the result is reduced modulo Phi_n.
    CycInt(int order, std::span<const BigInt> coeffs);
    CycInt(int order, std::initializer_list<long> coeffs);
    /// The rational integer `value` embedded in Z[zeta_n].
    CycInt(int order, const BigInt& value);

    static CycInt zeta_pow(int order, long exponent);

    int order() const { return order_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// The rational-integer value if every non-constant coordinate is zero.
    std::optional<BigInt> as_integer() const;
    /// Inverse when the element is +-zeta^j; other units are not detected.
    std::optional<CycInt> unit_inverse() const;
    /// Image under the automorphism zeta -> zeta^t, gcd(t, n) = 1.
    CycInt galois(long t) const;

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const CycInt& o);
    CycInt operator-() const;

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend bool operator==(const CycInt& a, const CycInt& b);

private:
    CycInt(int order, std::vector<BigInt> coeffs, bool already_reduced);
    void check_same_ring(const CycInt& o) const;
    static std::vector<BigInt> reduce_poly(int order, std::vector<BigInt> poly);

    int order_;
    std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycInt& a);

CycInt cyc_make(int order, std::span<const BigInt> coeffs);
CycInt cyc_mul(const CycInt& a, const CycInt& b);
CycInt cyc_zeta_pow(int order, long exponent);
std::optional<BigInt> cyc_as_integer(const CycInt& a);

// ---------------------------------------------------------------------------
// Uniform ring interface used by the series engine. Elements carry their own
// ring context (modulus, order), so constants are built "like" an existing
// element.

template <class R>
struct RingTraits;

template <>
struct RingTraits<BigInt> {
    static BigInt zero_like(const BigInt&) { return 0; }
    static BigInt from_int(const BigInt&, long v) { return v; }
    static bool is_zero(const BigInt& a) { return sgn(a) == 0; }
    static std::optional<BigInt> unit_inverse(const BigInt& a) {
        if (a == 1 || a == -1) return a;
        return std::nullopt;
    }
    static std::string to_string(const BigInt& a) { return a.get_str(); }
};

template <>
struct RingTraits<ModInt> {
    static ModInt zero_like(const ModInt& a) { return {0, a.modulus()}; }
    static ModInt from_int(const ModInt& a, long v) { return {v, a.modulus()}; }
    static bool is_zero(const ModInt& a) { return a.residue() == 0; }
    static std::optional<ModInt> unit_inverse(const ModInt& a) { return a.inverse(); }
    static std::string to_string(const ModInt& a) { return std::to_string(a.residue()); }
};

template <>
struct RingTraits<CycInt> {
    static CycInt zero_like(const CycInt& a) { return {a.order(), BigInt(0)}; }
    static CycInt from_int(const CycInt& a, long v) { return {a.order(), BigInt(v)}; }
    static bool is_zero(const CycInt& a) { return a.is_zero(); }
    static std::optional<CycInt> unit_inverse(const CycInt& a) { return a.unit_inverse(); }
    static std::string to_string(const CycInt& a);
};

template <class R>
concept CoefficientRing = requires(R a, const R& b, long v) {
    { a += b } -> std::same_as<R&>;
    { a -= b } -> std::same_as<R&>;
    { a * b };
    { -a };
    { a == b } -> std::convertible_to<bool>;
    { RingTraits<R>::zero_like(b) } -> std::same_as<R>;
    { RingTraits<R>::from_int(b, v) } -> std::same_as<R>;
    { RingTraits<R>::is_zero(b) } -> std::convertible_to<bool>;
    { RingTraits<R>::unit_inverse(b) } -> std::same_as<std::optional<R>>;
};

}  // namespace gfp
