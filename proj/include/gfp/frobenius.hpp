#pragma once

// Generalized Frobenius arrays with row difference alpha = m1 - m2.
//
//   top    a_1 >= a_2 >= ... >= a_{m1} >= 0
//   bottom b_1 >= b_2 >= ... >= b_{m2} >= 0
//   weight n = m1 + sum a_i + sum b_i
//
// Two families are counted:
//   repetition  each value occurs at most k times in a row       (phi_{k,alpha})
//   colored     entries come from k colored copies of N; a given
//               (value, color) occurs at most once in a row      (c phi_{k,alpha})

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "gfp/bivar.hpp"
#include "gfp/qseries.hpp"

namespace gfp {

enum class Variant { repetition, colored };

std::string to_string(Variant v);
Variant parse_variant(const std::string& name);

/// color is 0 for uncolored (repetition) parts and 1..k for colored parts.
struct Part {
    int value = 0;
    int color = 0;
    friend auto operator<=>(const Part&, const Part&) = default;
};

/// Parts in canonical order: value descending, then color descending.
using Row = std::vector<Part>;

struct FrobeniusArray {
    Row top;
    Row bottom;

    int weight() const;
    int row_difference() const { return static_cast<int>(top.size()) - static_cast<int>(bottom.size()); }
    friend auto operator<=>(const FrobeniusArray&, const FrobeniusArray&) = default;
};

struct CountRequest {
    Variant variant = Variant::repetition;
    int k = 1;
    int alpha = 0;
    int n = 0;
};

/// Largest weight accepted by the exhaustive enumerator.
inline constexpr int kEnumerationGuard = 30;

class GuardExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// True when the array satisfies the row constraints of `variant` with
/// parameter k (canonical order, multiplicities, color range).
bool is_valid_array(const FrobeniusArray& a, Variant variant, int k);

/// Calls `visit` once per array, in ascending lexicographic order of
/// (top, bottom). Throws GuardExceeded when n > kEnumerationGuard.
void for_each_array(const CountRequest& req, const std::function<void(const FrobeniusArray&)>& visit);

/// Every array of the requested kind, sorted.
std::vector<FrobeniusArray> enumerate_arrays(const CountRequest& req);

/// Number of arrays without materializing them.
BigInt count_arrays(const CountRequest& req);

BigInt count_phi(int k, int alpha, int n);
BigInt count_cphi(int k, int alpha, int n);

/// Window used when reading the z^alpha slice at q-truncation N:
/// [alpha - kN - k, alpha + kN + k].
ZWindow sound_window(int k, int alpha, int N);

/// The full bivariate product for `variant`, lambda = 0..N, expanded on `window`.
IntBivarSeries bivar_product(Variant variant, int k, int N, ZWindow window);

/// Coefficient of z^alpha in the bivariate product, as a series in q.
IntSeries bivar_coefficient_series(Variant variant, int k, int alpha, int N);
IntSeries bivar_coefficient_series(Variant variant, int k, int alpha, int N, ZWindow window);

}  // namespace gfp
