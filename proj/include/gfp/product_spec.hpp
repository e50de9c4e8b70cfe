#pragma once

// Infinite products prod_{n>=1} (1 + s q^{p n - r})^e described by a list of
// (sign, period, residue, exponent) quadruples.
//
// Text form: factors joined by ';', each "SIGN,PERIOD,RESIDUE,EXP" with
// SIGN in {+,-}. Whitespace is ignored. Example: "-,2,1,-2; -,12,8,-1".

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gfp/qseries.hpp"

namespace gfp {

struct ProductFactor {
    int sign = -1;  // +1 or -1
    int period = 1;
    int residue = 0;  // 0 <= residue <= period; residue == period needs sign +1
    int exponent = 1;  // nonzero

    friend bool operator==(const ProductFactor&, const ProductFactor&) = default;
};

struct ProductSpec {
    std::vector<ProductFactor> factors;

    friend bool operator==(const ProductSpec&, const ProductSpec&) = default;
};

class SpecSyntaxError : public std::invalid_argument {
public:
    SpecSyntaxError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws InvalidSpec when a factor breaks the ProductFactor constraints.
void validate(const ProductSpec& spec);

ProductSpec parse_product_spec(std::string_view text);
std::string render_product_spec(const ProductSpec& spec);

/// The product truncated at q^N. Negative-exponent factors are collected into
/// one positive product and inverted once.
IntSeries product_from_spec(const ProductSpec& spec, int N);

/// 1 / ((1-q^{2n-1})^2 (1-q^{12n-8}) (1-q^{12n-6}) (1-q^{12n-4}) (1-q^{12n})),
/// the generating function of phi_{2,-1}.
const ProductSpec& phi2m1_spec();

/// (1-q^{2n}) (1+q^{2n}) (1+q^{2n-2}) / (1-q^n)^2, the generating function of
/// c phi_{2,-1}.
const ProductSpec& cphi2m1_spec();

}  // namespace gfp
