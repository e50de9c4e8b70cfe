#include "gfp/congruence.hpp"

#include <algorithm>
#include <tuple>

namespace gfp {

namespace {

long mod(long a, long m) {
    const long r = a % m;
    return r < 0 ? r + m : r;
}

bool divisible(const BigInt& c, long M) {
    return mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(M)) != 0;
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

CongruenceClaim verify_congruence(const IntSeries& series, int A, int B, long M) {
    if (A < 1 || B < 0 || B >= A) throw std::invalid_argument("verify_congruence: need A >= 1 and 0 <= B < A");
    if (M < 2) throw std::invalid_argument("verify_congruence: need M >= 2");
    CongruenceClaim claim;
    claim.A = A;
    claim.B = B;
    claim.M = M;
    for (int i = B; i <= series.order(); i += A) {
        if (!divisible(series[i], M)) {
            claim.status = ClaimStatus::violated;
            claim.first_counterexample = i;
            return claim;
        }
        claim.verified_up_to = i;
        ++claim.witnesses;
    }
    return claim;
}

std::vector<CongruenceClaim> scan_congruences(const IntSeries& series, const ScanOptions& opts) {
    if (opts.max_A < 1) throw std::invalid_argument("scan_congruences: max_A must be >= 1");
    if (opts.max_M < 2) throw std::invalid_argument("scan_congruences: max_M must be >= 2");
    const int N = series.order();

    std::vector<CongruenceClaim> found;
    bool any_cell = false;
    for (int A = 1; A <= opts.max_A; ++A) {
        for (int B = 0; B < A; ++B) {
            const int available = B > N ? 0 : (N - B) / A + 1;
            if (available < opts.min_witnesses) continue;
            any_cell = true;
            for (long M = 2; M <= opts.max_M; ++M) {
                if (!opts.all_moduli && !is_prime(M)) continue;
                auto claim = verify_congruence(series, A, B, M);
                if (claim.status == ClaimStatus::verified) found.push_back(claim);
            }
        }
    }
    if (!any_cell)
        throw InsufficientWitnesses("scan_congruences: truncation " + std::to_string(N) + " admits fewer than " +
                                    std::to_string(opts.min_witnesses) + " indices for every progression");

    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        return std::tie(x.M, x.A, x.B) < std::tie(y.M, y.A, y.B);
    });
    for (auto& c : found) {
        c.subsumed = std::any_of(found.begin(), found.end(), [&](const CongruenceClaim& d) {
            return d.M == c.M && d.A < c.A && c.A % d.A == 0 && c.B % d.A == d.B;
        });
    }
    return found;
}

std::vector<std::pair<long, long>> residue_argument_check(long a, long b, long m) {
    if (m < 2) throw std::invalid_argument("residue_argument_check: m must be >= 2");
    std::vector<std::pair<long, long>> out;
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y)
            if (mod(mod(a, m) * (x * x % m) + mod(b, m) * (y * y % m), m) == 0) out.emplace_back(x, y);
    return out;
}

bool progression_exponent_check(int A, int B, long M) {
    if (A < 1 || B < 0 || B >= A || M < 2)
        throw std::invalid_argument("progression_exponent_check: need A >= 1, 0 <= B < A, M >= 2");
    for (long j = 0; j < 2 * M; ++j) {
        for (long k = 0; k < 2 * M; ++k) {
            const bool hits_progression = mod(j * (j + 1) / 2 + k * k + k, A) == B;
            const long odd_j = 2 * j + 1;
            const long odd_k = 2 * k + 1;
            const bool quadratic_zero = mod(odd_j * odd_j + 2 * odd_k * odd_k, M) == 0;
            if (hits_progression != quadratic_zero) return false;
            if (hits_progression && (mod(odd_j, M) != 0 || mod(odd_k, M) != 0)) return false;
        }
    }
    return true;
}

}  // namespace gfp
