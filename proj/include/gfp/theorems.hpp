#pragma once

// Closed-form generating functions for phi_{k,alpha} and c phi_{k,alpha}, the
// product formulas for k = 2, alpha = -1, and the intermediate identities
// used to derive them.
//
// Both theta-type numerators sum over (m_1, ..., m_{k-1}) in Z^{k-1} with
// m_k = alpha - (m_1 + ... + m_{k-1}) and q-exponent
//
//   Q = C(m_1+1, 2) + ... + C(m_{k-1}+1, 2) + C(m_k+1, 2)
//     = sum m_i^2 + sum_{i<j} m_i m_j - alpha sum m_i + (alpha^2 + alpha)/2.
//
// The cross term sits outside the halving; this is what the binomial
// expansion gives and what the enumeration counts confirm for k >= 3.

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gfp/qseries.hpp"

namespace gfp {

struct ThetaSumSpec {
    int k = 1;
    int alpha = 0;
    int N = 0;
};

class NonIntegralCoefficient : public std::runtime_error {
public:
    NonIntegralCoefficient(int index, const std::string& value)
        : std::runtime_error("non-integral coefficient at q^" + std::to_string(index) + ": " + value),
          index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

/// Q from the binomial-sum definition. m.size() must be k - 1.
long quad_exponent(int k, int alpha, std::span<const long> m);

/// [sum m_i^2 + (sum m_i - alpha)^2 + alpha] / 2; equal to quad_exponent.
long quad_exponent_closed_form(int alpha, std::span<const long> m);

/// Visits every m in Z^{k-1} with Q(m) <= N exactly once (coordinates bounded
/// by ceil(sqrt(2N + |alpha| + 1)), pruned on the partial sum of squares).
void for_each_lattice_point(const ThetaSumSpec& spec,
                            const std::function<void(std::span<const long> m, long q_exponent)>& visit);

/// sum_m q^{Q(m)} / (q;q)^k.
IntSeries theorem2_series(const ThetaSumSpec& spec);

/// Test hook: perturbs the zeta exponent of every numerator term by a constant.
struct Theorem1Options {
    long zeta_exponent_shift = 0;
};

/// Numerator sum_m (-1)^alpha zeta^{m_1(1-k) + ... + m_{k-1}(-1) + k alpha} q^{Q(m)}
/// over Z[zeta_{k+1}], times (q;q)^{-k}, before the integrality check.
TruncSeries<CycInt> theorem1_cyclotomic_series(const ThetaSumSpec& spec, Theorem1Options opts = {});

/// theorem1_cyclotomic_series converted to integers. Throws
/// NonIntegralCoefficient at the first coefficient outside Z.
IntSeries theorem1_series(const ThetaSumSpec& spec, Theorem1Options opts = {});

IntSeries corollary1_series(int N);
IntSeries corollary2_series(int N);

/// prod_{i>=1} (1-q^{2i}) * trinomial(q^{2i}) / (q;q)^2, where trinomial(x) is
/// 1 - x + x^2 unless overridden (mutation tests).
IntSeries psi2_product(int N, const std::function<IntSeries(int shift, int N)>& trinomial = {});

/// psi2_product(N) == corollary1_series(N).
bool psi2_identity_check(int N);

/// Three forms of the quintuple-type numerator behind the mod 5 congruence.
IntSeries theorem3_numerator_product(int N);   // prod (1-q^{2n})(1-q^{12n-2})(1-q^{12n-10})
IntSeries theorem3_numerator_lattice(int N);   // sum_m q^{9m^2-3m} - q^{9m^2+9m+2}
IntSeries theorem3_numerator_ak_form(int N);   // sum_{k>=0} a_k q^{k^2+k}
bool theorem3_numerator_identity(int N);

/// sum_m q^{m^2+m}, the numerator of corollary2_series before the triple product.
IntSeries theta_m2_plus_m(int N);

}  // namespace gfp
