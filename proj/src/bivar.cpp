#include "gfp/bivar.hpp"

namespace gfp {

JacobiTripleSides jacobi_triple(int N, ZWindow window) {
    if (N < 0) throw std::invalid_argument("jacobi_triple: N must be >= 0");
    const BigInt zero(0);
    const ZWindow work = window.widened(N + 1);

    IntBivarSeries prod = IntBivarSeries::one(N, work, zero);
    for (int n = 1; n <= N + 1; ++n) {
        if (n <= N) prod.multiply_sparse({{0, 0, BigInt(1)}, {0, n, BigInt(-1)}});
        if (n <= N) prod.multiply_sparse({{0, 0, BigInt(1)}, {1, n, BigInt(1)}});
        if (n - 1 <= N) prod.multiply_sparse({{0, 0, BigInt(1)}, {-1, n - 1, BigInt(1)}});
    }

    IntBivarSeries sum(N, window, zero);
    for (long m = -(N + 2); m <= N + 2; ++m) {
        const long e = m * (m + 1) / 2;
        if (e <= N) sum.add_term(static_cast<int>(m), static_cast<int>(e), BigInt(1));
    }
    return {prod.clipped(window), std::move(sum)};
}

}  // namespace gfp
