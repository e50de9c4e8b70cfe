#include "gfp/theorems.hpp"

#include <cmath>
#include <cstdlib>

#include "gfp/product_spec.hpp"

namespace gfp {

namespace {

long binom2(long x) { return x * (x - 1) / 2; }  // C(x, 2), valid for all integers

void check_spec(const ThetaSumSpec& spec) {
    if (spec.k < 1) throw std::invalid_argument("k must be >= 1");
    if (spec.N < 0) throw std::invalid_argument("N must be >= 0");
}

}  // namespace

long quad_exponent(int k, int alpha, std::span<const long> m) {
    if (k < 1) throw std::invalid_argument("quad_exponent: k must be >= 1");
    if (m.size() != static_cast<std::size_t>(k - 1))
        throw std::invalid_argument("quad_exponent: expected " + std::to_string(k - 1) + " indices, got " +
                                    std::to_string(m.size()));
    long q = 0;
    long sum = 0;
    for (long mi : m) {
        q += binom2(mi + 1);
        sum += mi;
    }
    return q + binom2(alpha - sum + 1);
}

long quad_exponent_closed_form(int alpha, std::span<const long> m) {
    long squares = 0;
    long sum = 0;
    for (long mi : m) {
        squares += mi * mi;
        sum += mi;
    }
    const long twice = squares + (sum - alpha) * (sum - alpha) + alpha;
    return twice / 2;
}

void for_each_lattice_point(const ThetaSumSpec& spec,
                            const std::function<void(std::span<const long>, long)>& visit) {
    check_spec(spec);
    const long budget = 2L * spec.N + std::abs(spec.alpha);  // Q <= N implies sum m_i^2 <= budget
    const long bound = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(budget + 1))));
    std::vector<long> m(static_cast<std::size_t>(spec.k - 1), 0);

    auto recurse = [&](auto&& self, std::size_t depth, long squares) -> void {
        if (depth == m.size()) {
            const long q = quad_exponent(spec.k, spec.alpha, m);
            if (q <= spec.N) visit(m, q);
            return;
        }
        for (long v = -bound; v <= bound; ++v) {
            if (squares + v * v > budget) continue;
            m[depth] = v;
            self(self, depth + 1, squares + v * v);
        }
    };
    recurse(recurse, 0, 0);
}

namespace {

IntSeries inverse_euler_power(int k, int N) { return ps_pow(ps_inv(euler_product(N)), static_cast<unsigned>(k)); }

}  // namespace

IntSeries theorem2_series(const ThetaSumSpec& spec) {
    IntSeries numerator(spec.N, BigInt(0));
    for_each_lattice_point(spec, [&](std::span<const long>, long q) { numerator[static_cast<int>(q)] += 1; });
    return numerator * inverse_euler_power(spec.k, spec.N);
}

TruncSeries<CycInt> theorem1_cyclotomic_series(const ThetaSumSpec& spec, Theorem1Options opts) {
    check_spec(spec);
    const int order = spec.k + 1;
    const CycInt zero(order, BigInt(0));
    TruncSeries<CycInt> numerator(spec.N, zero);
    const CycInt sign(order, BigInt(spec.alpha % 2 == 0 ? 1 : -1));

    for_each_lattice_point(spec, [&](std::span<const long> m, long q) {
        long e = static_cast<long>(spec.k) * spec.alpha + opts.zeta_exponent_shift;
        for (std::size_t j = 0; j < m.size(); ++j) e += m[j] * (static_cast<long>(j + 1) - spec.k);
        numerator[static_cast<int>(q)] += sign * CycInt::zeta_pow(order, e);
    });
    return numerator * embed_cyclotomic(inverse_euler_power(spec.k, spec.N), order);
}

IntSeries theorem1_series(const ThetaSumSpec& spec, Theorem1Options opts) {
    const auto cyc = theorem1_cyclotomic_series(spec, opts);
    IntSeries out(spec.N, BigInt(0));
    for (int i = 0; i <= spec.N; ++i) {
        auto v = cyc[i].as_integer();
        if (!v) throw NonIntegralCoefficient(i, RingTraits<CycInt>::to_string(cyc[i]));
        out[i] = *v;
    }
    return out;
}

IntSeries corollary1_series(int N) { return product_from_spec(phi2m1_spec(), N); }

IntSeries corollary2_series(int N) { return product_from_spec(cphi2m1_spec(), N); }

IntSeries psi2_product(int N, const std::function<IntSeries(int, int)>& trinomial) {
    IntSeries r = IntSeries::one(N, BigInt(0));
    for (int i = 1; 2 * i <= N; ++i) {
        const int s = 2 * i;
        for (int j = N; j >= s; --j) r[j] -= r[j - s];  // (1 - q^{2i})
        if (trinomial) {
            r *= trinomial(s, N);
        } else {
            // (1 - x + x^2), x = q^{2i}, applied from the top down
            for (int j = N; j >= s; --j) {
                BigInt add = -r[j - s];
                if (j >= 2 * s) add += r[j - 2 * s];
                r[j] += add;
            }
        }
    }
    return r * ps_pow(ps_inv(euler_product(N)), 2);
}

bool psi2_identity_check(int N) { return psi2_product(N) == corollary1_series(N); }

IntSeries theorem3_numerator_product(int N) {
    return single_factor_product(-1, 2, 0, 1, N) * single_factor_product(-1, 12, 2, 1, N) *
           single_factor_product(-1, 12, 10, 1, N);
}

IntSeries theorem3_numerator_lattice(int N) {
    IntSeries r(N, BigInt(0));
    for (long m = -N - 1; m <= N + 1; ++m) {
        const long plus = 9 * m * m - 3 * m;
        const long minus = 9 * m * m + 9 * m + 2;
        if (plus <= N) r[static_cast<int>(plus)] += 1;
        if (minus <= N) r[static_cast<int>(minus)] -= 1;
    }
    return r;
}

IntSeries theorem3_numerator_ak_form(int N) {
    IntSeries r(N, BigInt(0));
    for (long k = 0; k * k + k <= N; ++k) r[static_cast<int>(k * k + k)] += (k % 3 == 1) ? -2 : 1;
    return r;
}

bool theorem3_numerator_identity(int N) {
    const auto prod = theorem3_numerator_product(N);
    return prod == theorem3_numerator_lattice(N) && prod == theorem3_numerator_ak_form(N);
}

IntSeries theta_m2_plus_m(int N) {
    IntSeries r(N, BigInt(0));
    for (long m = -N - 1; m <= N; ++m)
        if (m * m + m <= N) r[static_cast<int>(m * m + m)] += 1;
    return r;
}

}  // namespace gfp
