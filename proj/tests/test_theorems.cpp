#include <doctest.h>

#include <optional>

#include "gfp/frobenius.hpp"
#include "gfp/product_spec.hpp"
#include "gfp/theorems.hpp"
#include "oracle.hpp"

using namespace gfp;

namespace {

// Independent numerator: brute-force lattice sum over a generous box, with
// the exponent computed from the binomial definition directly.
oracle::Poly numerator_box(int k, int alpha, int N) {
    oracle::Poly num(N + 1, BigInt(0));
    const int box = 2 * N + 4;
    std::vector<long> m(k - 1, -box);
    while (true) {
        long s = 0, q = 0;
        for (long v : m) {
            s += v;
            q += (v + 1) * v / 2;
        }
        const long last = alpha - s;
        q += (last + 1) * last / 2;
        if (q <= N) num[q] += 1;
        std::size_t i = 0;
        while (i < m.size() && m[i] == box) m[i++] = -box;
        if (i == m.size()) break;
        ++m[i];
    }
    return num;
}

}  // namespace

TEST_CASE("quad_exponent") {
    const std::vector<long> zero{0};
    CHECK(quad_exponent(2, -1, zero) == 0);
    for (long m = -10; m <= 10; ++m) {
        const std::vector<long> v{m};
        CHECK(quad_exponent(2, -1, v) == m * m + m);
    }
    const std::vector<long> ones{1, 1};
    CHECK(quad_exponent(3, 0, ones) == 3);
    CHECK(quad_exponent_closed_form(0, ones) == 3);
    CHECK(quad_exponent(1, 3, {}) == 6);
    CHECK_THROWS_AS(quad_exponent(3, 0, zero), std::invalid_argument);
}

TEST_CASE("quad_exponent closed form matches the binomial sum") {
    for (int k = 1; k <= 4; ++k) {
        std::vector<long> m(k - 1, -6);
        while (true) {
            for (int alpha = -4; alpha <= 4; ++alpha) CHECK(quad_exponent(k, alpha, m) == quad_exponent_closed_form(alpha, m));
            std::size_t i = 0;
            while (i < m.size() && m[i] == 6) m[i++] = -6;
            if (i == m.size()) break;
            ++m[i];
        }
    }
}

TEST_CASE("halving the cross term instead gives the wrong counts for k = 3") {
    // sum m_i^2 - alpha sum m_i + (alpha^2 + alpha + sum_{i<j} m_i m_j) / 2
    auto halved = [](int alpha, const std::vector<long>& m) -> std::optional<long> {
        long sq = 0, s = 0, cross = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            sq += m[i] * m[i];
            s += m[i];
            for (std::size_t j = i + 1; j < m.size(); ++j) cross += m[i] * m[j];
        }
        const long twice = 2 * (sq - alpha * s) + alpha * alpha + alpha + cross;
        if (twice % 2 != 0) return std::nullopt;
        return twice / 2;
    };
    const std::vector<long> m{1, 2};
    CHECK(quad_exponent(3, 0, m) == 7);
    CHECK(halved(0, m) == 6);

    // numerator built from the halved form, for k = 3, alpha = 0
    const int N = 8;
    IntSeries num(N, BigInt(0));
    for (long a = -8; a <= 8; ++a)
        for (long b = -8; b <= 8; ++b) {
            const auto q = halved(0, {a, b});
            if (q && *q >= 0 && *q <= N) num[static_cast<int>(*q)] += 1;
        }
    const auto wrong = num * ps_pow(ps_inv(euler_product(N)), 3);
    CHECK_FALSE(wrong == theorem2_series({3, 0, N}));
    for (int k = 1; k <= 2; ++k)
        for (long a = -5; a <= 5; ++a) {
            std::vector<long> v(k - 1, a);
            CHECK(halved(-1, v) == quad_exponent(k, -1, v));
        }
}

TEST_CASE("lattice enumeration is complete") {
    for (int k = 1; k <= 3; ++k)
        for (int alpha = -3; alpha <= 3; ++alpha) {
            const int N = 15;
            IntSeries num(N, BigInt(0));
            for_each_lattice_point({k, alpha, N}, [&](std::span<const long>, long q) { num[static_cast<int>(q)] += 1; });
            CHECK(num == IntSeries(numerator_box(k, alpha, N)));
        }
}

TEST_CASE("theorem2_series") {
    CHECK(theorem2_series({2, -1, 2}) == int_series({2, 4, 12}));
    CHECK(theorem2_series({1, 0, 4}) == int_series({1, 1, 2, 3, 5}));
    const auto s = theorem2_series({2, -1, 12});
    for (int n = 0; n <= 12; ++n) CHECK(s[n] == count_cphi(2, -1, n));
}

TEST_CASE("theorem1_series") {
    CHECK(theorem1_series({2, -1, 3}) == int_series({1, 2, 3, 6}));
    CHECK(theorem1_series({1, 0, 3}) == int_series({1, 1, 2, 3}));
    CHECK(theorem1_series({2, -1, 0}) == int_series({1}));
    const auto s = theorem1_series({2, -1, 12});
    for (int n = 0; n <= 12; ++n) CHECK(s[n] == count_phi(2, -1, n));
}

TEST_CASE("theorem formulas against enumeration on the grid") {
    const int N = 10;
    for (int k = 1; k <= 3; ++k)
        for (int alpha = -2; alpha <= 2; ++alpha) {
            CAPTURE(k);
            CAPTURE(alpha);
            const auto t1 = theorem1_series({k, alpha, N});
            const auto t2 = theorem2_series({k, alpha, N});
            for (int n = 0; n <= N; ++n) {
                CHECK(t1[n] == count_phi(k, alpha, n));
                CHECK(t2[n] == count_cphi(k, alpha, n));
            }
        }
    // frozen from an independent brute-force count
    CHECK(theorem2_series({3, -2, 10}) == int_series({3, 12, 42, 111, 279, 630, 1362, 2775, 5472, 10389, 19224}));
    CHECK(theorem2_series({3, 0, 10}) == int_series({1, 9, 27, 82, 207, 486, 1055, 2205, 4374, 8427, 15696}));
}

TEST_CASE("a perturbed zeta exponent is caught by the integrality check") {
    CHECK_THROWS_AS(theorem1_series({2, -1, 5}, {.zeta_exponent_shift = 1}), NonIntegralCoefficient);
    CHECK_THROWS_AS(theorem1_series({2, -1, 5}, {.zeta_exponent_shift = -1}), NonIntegralCoefficient);
    try {
        theorem1_series({2, -1, 5}, {.zeta_exponent_shift = 1});
    } catch (const NonIntegralCoefficient& e) {
        CHECK(e.index() == 0);
    }
    for (int k = 2; k <= 3; ++k)
        for (int alpha = -2; alpha <= 2; ++alpha)
            CHECK_THROWS_AS(theorem1_series({k, alpha, 10}, {.zeta_exponent_shift = 1}), NonIntegralCoefficient);
}

TEST_CASE("corollary products") {
    CHECK(corollary1_series(4) == int_series({1, 2, 3, 6, 10}));
    CHECK(corollary1_series(0) == int_series({1}));
    CHECK(corollary1_series(50) == theorem1_series({2, -1, 50}));

    CHECK(corollary2_series(2) == int_series({2, 4, 12}));
    const auto c2 = corollary2_series(4);
    CHECK(c2[3] == 24);
    CHECK(c2[4] == 50);
    CHECK(corollary2_series(50) == theorem2_series({2, -1, 50}));

    // frozen from independent factor-by-factor expansion
    CHECK(corollary1_series(14) == int_series({1, 2, 3, 6, 10, 16, 26, 40, 60, 90, 131, 188, 269, 378, 525}));
    CHECK(corollary2_series(12) == int_series({2, 4, 12, 24, 50, 92, 172, 296, 510, 840, 1372, 2176, 3424}));
}

TEST_CASE("colored product numerator is the theta sum over m^2 + m") {
    const int N = 60;
    CHECK(corollary2_series(N) == theta_m2_plus_m(N) * ps_pow(ps_inv(euler_product(N)), 2));
    CHECK(theta_m2_plus_m(6) == int_series({2, 0, 2, 0, 0, 0, 2}));
}

TEST_CASE("psi2_identity_check") {
    CHECK(psi2_identity_check(0));
    CHECK(psi2_identity_check(30));
    CHECK(psi2_identity_check(100));
    const auto mutated = psi2_product(30, [](int s, int N) {
        IntSeries t = IntSeries::one(N, BigInt(0));
        if (s <= N) t[s] = -1;
        if (2 * s <= N) t[2 * s] = -1;
        return t;
    });
    CHECK_FALSE(mutated == corollary1_series(30));
}

TEST_CASE("theorem3_numerator_identity") {
    for (const auto& s : {theorem3_numerator_product(10), theorem3_numerator_lattice(10), theorem3_numerator_ak_form(10)}) {
        CHECK(s[0] == 1);
        CHECK(s[2] == -2);
    }
    CHECK(theorem3_numerator_identity(100));
    CHECK(theorem3_numerator_identity(0));
}

TEST_CASE("mod 5 rewriting through the Euler cube") {
    // (q;q)^3 (q^2;q^2)(q^10;q^12)(q^2;q^12)/(q^5;q^5) agrees with phi_{2,-1} mod 5
    const int N = 80;
    const auto lhs = reduce_mod(corollary1_series(N), 5);
    const auto rhs = reduce_mod(euler_cube(N) * theorem3_numerator_ak_form(N) *
                                    ps_inv(single_factor_product(-1, 5, 0, 1, N)),
                                5);
    CHECK(lhs == rhs);
}

TEST_CASE("bad parameters") {
    CHECK_THROWS_AS(theorem2_series({0, 0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(theorem1_series({1, 0, -1}), std::invalid_argument);
}
