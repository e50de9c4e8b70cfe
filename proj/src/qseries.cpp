#include "gfp/qseries.hpp"

namespace gfp {

TruncSeries<ModInt> reduce_mod(const IntSeries& a, std::int64_t modulus) {
    return ps_map<ModInt>(a, [modulus](const BigInt& c) { return ModInt::reduce(c, modulus); });
}

TruncSeries<CycInt> embed_cyclotomic(const IntSeries& a, int order) {
    return ps_map<CycInt>(a, [order](const BigInt& c) { return CycInt(order, c); });
}

IntSeries int_series(std::initializer_list<long> coeffs) {
    return IntSeries(std::vector<BigInt>(coeffs.begin(), coeffs.end()));
}

IntSeries euler_product(int N) {
    IntSeries r = IntSeries::one(N, BigInt(0));
    // multiply by (1 - q^n) in place; factors with n > N are 1 mod q^{N+1}
    for (int n = 1; n <= N; ++n)
        for (int i = N; i >= n; --i) r[i] -= r[i - n];
    return r;
}

IntSeries euler_cube(int N) {
    IntSeries r(N, BigInt(0));
    for (long j = 0; j * (j + 1) / 2 <= N; ++j) {
        const long c = (j % 2 == 0 ? 1 : -1) * (2 * j + 1);
        r[static_cast<int>(j * (j + 1) / 2)] = c;
    }
    return r;
}

IntSeries single_factor_product(int sign, int period, int residue, int exponent, int N) {
    if (period < 1 || residue < 0 || residue > period || exponent == 0 || (sign != 1 && sign != -1))
        throw std::invalid_argument("single_factor_product: bad factor");
    IntSeries r = IntSeries::one(N, BigInt(0));
    for (int n = 1;; ++n) {
        const int d = period * n - residue;
        if (d > N) break;
        for (int rep = 0; rep < std::abs(exponent); ++rep) {
            if (d == 0) {
                if (sign < 0) throw std::invalid_argument("single_factor_product: factor (1 - q^0) is zero");
                if (exponent < 0) throw NonUnitConstant("single_factor_product: 1/(1+q^0) is not integral");
                for (auto i = 0; i <= N; ++i) r[i] *= 2;
            } else if (exponent > 0) {
                for (int i = N; i >= d; --i) r[i] += sign * r[i - d];
            } else {
                for (int i = d; i <= N; ++i) r[i] -= sign * r[i - d];
            }
        }
    }
    return r;
}

}  // namespace gfp
