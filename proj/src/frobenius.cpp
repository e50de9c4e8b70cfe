#include "gfp/frobenius.hpp"

#include <algorithm>
#include <map>

namespace gfp {

std::string to_string(Variant v) { return v == Variant::repetition ? "repetition" : "colored"; }

Variant parse_variant(const std::string& name) {
    if (name == "repetition") return Variant::repetition;
    if (name == "colored") return Variant::colored;
    throw std::invalid_argument("unknown variant '" + name + "' (expected repetition or colored)");
}

int FrobeniusArray::weight() const {
    int w = static_cast<int>(top.size());
    for (const auto& p : top) w += p.value;
    for (const auto& p : bottom) w += p.value;
    return w;
}

namespace {

bool valid_row(const Row& row, Variant variant, int k) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        const Part& p = row[i];
        if (p.value < 0) return false;
        if (variant == Variant::colored) {
            if (p.color < 1 || p.color > k) return false;
            if (i > 0 && !(row[i - 1] > p)) return false;  // strictly descending pairs
        } else {
            if (p.color != 0) return false;
            if (i > 0 && row[i - 1].value < p.value) return false;
            if (i >= static_cast<std::size_t>(k) && row[i - k].value == p.value) return false;
        }
    }
    return true;
}

struct RowKey {
    int length;
    int cost;
    friend auto operator<=>(const RowKey&, const RowKey&) = default;
};

// All canonical rows of total cost <= max_cost, grouped by (length, cost).
// A part of value v costs v + shift (shift = 1 on the top row, 0 below).
std::map<RowKey, std::vector<Row>> rows_by_shape(Variant variant, int k, int shift, int max_cost) {
    struct Item {
        Part part;
        int multiplicity;
    };
    std::vector<Item> items;  // descending canonical order
    for (int v = max_cost - shift; v >= 0; --v) {
        if (variant == Variant::colored) {
            for (int c = k; c >= 1; --c) items.push_back({{v, c}, 1});
        } else {
            items.push_back({{v, 0}, k});
        }
    }

    std::map<RowKey, std::vector<Row>> out;
    Row current;
    // depth-first over items; parts appended in canonical order
    auto recurse = [&](auto&& self, std::size_t i, int cost) -> void {
        if (i == items.size()) {
            out[{static_cast<int>(current.size()), cost}].push_back(current);
            return;
        }
        const Item& it = items[i];
        const int part_cost = it.part.value + shift;
        int taken = 0;
        self(self, i + 1, cost);
        while (taken < it.multiplicity && cost + (taken + 1) * part_cost <= max_cost) {
            // a zero-cost part can be taken only `multiplicity` times, so this terminates
            current.push_back(it.part);
            ++taken;
            self(self, i + 1, cost + taken * part_cost);
        }
        current.resize(current.size() - taken);
    };
    recurse(recurse, 0, 0);
    for (auto& [key, rows] : out) std::sort(rows.begin(), rows.end());
    return out;
}

void check_request(const CountRequest& req) {
    if (req.k < 1) throw std::invalid_argument("k must be >= 1");
    if (req.n < 0) throw std::invalid_argument("n must be >= 0");
    if (req.n > kEnumerationGuard)
        throw GuardExceeded("enumeration guard: n = " + std::to_string(req.n) + " exceeds " +
                            std::to_string(kEnumerationGuard));
}

}  // namespace

bool is_valid_array(const FrobeniusArray& a, Variant variant, int k) {
    return valid_row(a.top, variant, k) && valid_row(a.bottom, variant, k);
}

void for_each_array(const CountRequest& req, const std::function<void(const FrobeniusArray&)>& visit) {
    check_request(req);
    const auto tops = rows_by_shape(req.variant, req.k, 1, req.n);
    const auto bottoms = rows_by_shape(req.variant, req.k, 0, req.n);

    // pair each top row with the matching bottom group, then sort by (top, bottom)
    std::vector<std::pair<const Row*, const std::vector<Row>*>> pairs;
    for (const auto& [key, rows] : tops) {
        const int m2 = key.length - req.alpha;
        if (m2 < 0) continue;
        auto it = bottoms.find({m2, req.n - key.cost});
        if (it == bottoms.end()) continue;
        for (const auto& r : rows) pairs.emplace_back(&r, &it->second);
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) { return *x.first < *y.first; });

    FrobeniusArray a;
    for (const auto& [top, group] : pairs) {
        a.top = *top;
        for (const auto& b : *group) {
            a.bottom = b;
            visit(a);
        }
    }
}

std::vector<FrobeniusArray> enumerate_arrays(const CountRequest& req) {
    std::vector<FrobeniusArray> out;
    for_each_array(req, [&](const FrobeniusArray& a) { out.push_back(a); });
    return out;
}

BigInt count_arrays(const CountRequest& req) {
    check_request(req);
    const auto tops = rows_by_shape(req.variant, req.k, 1, req.n);
    const auto bottoms = rows_by_shape(req.variant, req.k, 0, req.n);
    BigInt total = 0;
    for (const auto& [key, rows] : tops) {
        const int m2 = key.length - req.alpha;
        if (m2 < 0) continue;
        if (auto it = bottoms.find({m2, req.n - key.cost}); it != bottoms.end())
            total += BigInt(static_cast<unsigned long>(rows.size())) *
                     static_cast<unsigned long>(it->second.size());
    }
    return total;
}

BigInt count_phi(int k, int alpha, int n) { return count_arrays({Variant::repetition, k, alpha, n}); }

BigInt count_cphi(int k, int alpha, int n) { return count_arrays({Variant::colored, k, alpha, n}); }

ZWindow sound_window(int k, int alpha, int N) { return {alpha - k * N - k, alpha + k * N + k}; }

IntBivarSeries bivar_product(Variant variant, int k, int N, ZWindow window) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    using Term = IntBivarSeries::Term;
    IntBivarSeries prod = IntBivarSeries::one(N, window, BigInt(0));
    // lambda-th bottom factor with lambda > N only adds powers above q^N
    for (int lambda = 0; lambda <= N; ++lambda) {
        if (variant == Variant::repetition) {
            std::vector<Term> top, bottom;
            for (int j = 0; j <= k; ++j) {
                top.push_back({j, j * (lambda + 1), BigInt(1)});
                bottom.push_back({-j, j * lambda, BigInt(1)});
            }
            prod.multiply_sparse(top);
            prod.multiply_sparse(bottom);
        } else {
            const std::vector<Term> top{{0, 0, BigInt(1)}, {1, lambda + 1, BigInt(1)}};
            const std::vector<Term> bottom{{0, 0, BigInt(1)}, {-1, lambda, BigInt(1)}};
            for (int c = 0; c < k; ++c) {
                prod.multiply_sparse(top);
                prod.multiply_sparse(bottom);
            }
        }
    }
    return prod;
}

IntSeries bivar_coefficient_series(Variant variant, int k, int alpha, int N, ZWindow window) {
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    if (!window.contains(alpha)) throw std::invalid_argument("z-window does not contain alpha");
    return bivar_product(variant, k, N, window).z_slice(alpha);
}

IntSeries bivar_coefficient_series(Variant variant, int k, int alpha, int N) {
    return bivar_coefficient_series(variant, k, alpha, N, sound_window(k, alpha, N));
}

}  // namespace gfp
