#pragma once

// Congruences of the form  coefficient(A n + B) == 0 (mod M)  on a truncated
// series: checking, searching, and the finite residue arguments behind the
// mod-5 results for phi_{2,-1} and c phi_{2,-1}.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gfp/qseries.hpp"

namespace gfp {

enum class ClaimStatus { verified, violated };

struct CongruenceClaim {
    int A = 1;
    int B = 0;
    long M = 2;
    int verified_up_to = -1;  // largest index A n + B that was checked; -1 if none
    int witnesses = 0;        // number of indices checked
    ClaimStatus status = ClaimStatus::verified;
    std::optional<int> first_counterexample;
    bool subsumed = false;

    friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) = default;
};

class InsufficientWitnesses : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Checks every index A n + B <= N. On violation, verified_up_to is the last
/// index that passed and first_counterexample the failing one.
CongruenceClaim verify_congruence(const IntSeries& series, int A, int B, long M);

struct ScanOptions {
    int max_A = 8;
    long max_M = 7;
    int min_witnesses = 20;
    bool all_moduli = false;  // default: prime moduli only
};

/// Every (A, B, M) with A <= max_A, M <= max_M that holds on all available
/// indices, counting only cells with at least min_witnesses indices. Sorted
/// by (M, A, B). A claim is flagged subsumed when a reported claim with the
/// same M, a proper divisor A' of A and B' == B (mod A') implies it.
/// Throws InsufficientWitnesses when no cell has enough indices.
std::vector<CongruenceClaim> scan_congruences(const IntSeries& series, const ScanOptions& opts);

bool is_prime(long n);

/// All (x, y) in [0, m)^2 with a x^2 + b y^2 == 0 (mod m), in lexicographic order.
std::vector<std::pair<long, long>> residue_argument_check(long a, long b, long m);

/// Exhaustive check over j, k in [0, 2M) that
///   C(j+1, 2) + k^2 + k == B (mod A)   <=>   (2j+1)^2 + 2(2k+1)^2 == 0 (mod M)
/// and that every pair satisfying it has 2j+1 == 2k+1 == 0 (mod M).
bool progression_exponent_check(int A, int B, long M);

}  // namespace gfp
