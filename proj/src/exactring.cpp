#include "gfp/exactring.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gfp {

// ---------------------------------------------------------------------------
// ModInt

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

ModInt::ModInt(std::int64_t value, std::int64_t modulus) : residue_(0), modulus_(modulus) {
    if (modulus < 2) throw std::invalid_argument("ModInt: modulus must be >= 2");
    residue_ = floor_mod(value, modulus);
}

ModInt ModInt::reduce(const BigInt& value, std::int64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("ModInt: modulus must be >= 2");
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(modulus));
    return {static_cast<std::int64_t>(r.get_si()), modulus};
}

void ModInt::check_same_ring(const ModInt& o) const {
    if (modulus_ != o.modulus_)
        throw RingMismatch("ModInt: modulus " + std::to_string(modulus_) + " vs " +
                           std::to_string(o.modulus_));
}

ModInt& ModInt::operator+=(const ModInt& o) {
    check_same_ring(o);
    residue_ += o.residue_;
    if (residue_ >= modulus_) residue_ -= modulus_;
    return *this;
}

ModInt& ModInt::operator-=(const ModInt& o) {
    check_same_ring(o);
    residue_ -= o.residue_;
    if (residue_ < 0) residue_ += modulus_;
    return *this;
}

ModInt& ModInt::operator*=(const ModInt& o) {
    check_same_ring(o);
    residue_ = static_cast<std::int64_t>(static_cast<__int128>(residue_) * o.residue_ % modulus_);
    return *this;
}

ModInt ModInt::operator-() const { return {residue_ == 0 ? 0 : modulus_ - residue_, modulus_}; }

std::optional<ModInt> ModInt::inverse() const {
    // extended Euclid on (residue, modulus)
    std::int64_t r0 = modulus_, r1 = residue_;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    if (r0 != 1) return std::nullopt;
    return ModInt(t0, modulus_);
}

std::ostream& operator<<(std::ostream& os, const ModInt& a) {
    return os << a.residue() << " (mod " << a.modulus() << ")";
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact quotient of num by the monic polynomial den.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const std::int64_t c = num[i];
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (num[i] != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
    return quot;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
    static std::mutex mu;
    static std::map<int, std::vector<std::int64_t>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d of n
    std::vector<std::int64_t> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
    std::lock_guard lock(mu);
    // std::map never invalidates references on insert
    return cache.emplace(n, std::move(poly)).first->second;
}

// ---------------------------------------------------------------------------
// CycInt

std::vector<BigInt> CycInt::reduce_poly(int order, std::vector<BigInt> poly) {
    const auto& phi_n = cyclotomic_polynomial(order);
    const std::size_t deg = phi_n.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (sgn(poly[i]) == 0) continue;
        const BigInt c = poly[i];
        for (std::size_t j = 0; j <= deg; ++j) {
            if (phi_n[j] != 0) poly[i - deg + j] -= c * static_cast<long>(phi_n[j]);
        }
    }
    poly.resize(deg, BigInt(0));
    return poly;
}

CycInt::CycInt(int order, std::vector<BigInt> coeffs, bool already_reduced)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 1) throw std::invalid_argument("CycInt: order must be >= 1");
    if (!already_reduced) coeffs_ = reduce_poly(order_, std::move(coeffs_));
}

CycInt::CycInt(int order, std::span<const BigInt> coeffs)
    : CycInt(order, std::vector<BigInt>(coeffs.begin(), coeffs.end()), false) {}

CycInt::CycInt(int order, std::initializer_list<long> coeffs)
    : CycInt(order, std::vector<BigInt>(coeffs.begin(), coeffs.end()), false) {}

CycInt::CycInt(int order, const BigInt& value) : CycInt(order, std::vector<BigInt>{value}, false) {}

CycInt CycInt::zeta_pow(int order, long exponent) {
    if (order < 1) throw std::invalid_argument("CycInt: order must be >= 1");
    long r = exponent % order;
    if (r < 0) r += order;
    std::vector<BigInt> poly(static_cast<std::size_t>(r) + 1, BigInt(0));
    poly[r] = 1;
    return {order, std::move(poly), false};
}

void CycInt::check_same_ring(const CycInt& o) const {
    if (order_ != o.order_)
        throw RingMismatch("CycInt: order " + std::to_string(order_) + " vs " +
                           std::to_string(o.order_));
}

bool CycInt::is_zero() const {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

std::optional<BigInt> CycInt::as_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return std::nullopt;
    return coeffs_[0];
}

std::optional<CycInt> CycInt::unit_inverse() const {
    for (long j = 0; j < order_; ++j) {
        const CycInt z = zeta_pow(order_, j);
        if (*this == z) return zeta_pow(order_, -j);
        if (*this == -z) return -zeta_pow(order_, -j);
    }
    return std::nullopt;
}

CycInt CycInt::galois(long t) const {
    if (std::gcd(t, static_cast<long>(order_)) != 1)
        throw std::invalid_argument("CycInt::galois: exponent not coprime to order");
    std::vector<BigInt> poly(order_, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        long e = static_cast<long>(i) * t % order_;
        if (e < 0) e += order_;
        poly[e] += coeffs_[i];
    }
    return {order_, std::move(poly), false};
}

CycInt& CycInt::operator+=(const CycInt& o) {
    check_same_ring(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    check_same_ring(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) { return *this = *this * o; }

CycInt CycInt::operator-() const {
    std::vector<BigInt> neg(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) neg[i] = -coeffs_[i];
    return {order_, std::move(neg), true};
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    a.check_same_ring(b);
    const std::size_t d = a.coeffs_.size();
    std::vector<BigInt> prod(d == 0 ? 0 : 2 * d - 1, BigInt(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return {a.order_, CycInt::reduce_poly(a.order_, std::move(prod)), true};
}

bool operator==(const CycInt& a, const CycInt& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::ostream& operator<<(std::ostream& os, const CycInt& a) {
    return os << RingTraits<CycInt>::to_string(a);
}

std::string RingTraits<CycInt>::to_string(const CycInt& a) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i) os << ',';
        os << a.coeffs()[i].get_str();
    }
    os << "]_" << a.order();
    return os.str();
}

CycInt cyc_make(int order, std::span<const BigInt> coeffs) {
    if (order < 1) throw std::invalid_argument("cyc_make: order must be >= 1");
    if (coeffs.size() > static_cast<std::size_t>(euler_phi(order)))
        throw std::invalid_argument("cyc_make: more coefficients than phi(order)");
    return {order, coeffs};
}

CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }

CycInt cyc_zeta_pow(int order, long exponent) { return CycInt::zeta_pow(order, exponent); }

std::optional<BigInt> cyc_as_integer(const CycInt& a) { return a.as_integer(); }

}  // namespace gfp
