#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nbs/rng.hpp"

namespace nbs {

// Boolean function of n variables as a dense table of 2^n output bits.
// The input vector x = (x_1, ..., x_n) is stored at index
// sum_j x_j * 2^(j-1), i.e. x_1 is the least significant index bit. Every
// construction in this library (sigma tables, extensions, transforms)
// shares this convention.
class TruthTable {
public:
    static constexpr int kMinVars = 1;
    static constexpr int kMaxVars = 20;

    TruthTable() = default;
    explicit TruthTable(int n);
    TruthTable(int n, std::vector<std::uint8_t> bits);

    int n() const { return n_; }
    std::size_t size() const { return bits_.size(); }

    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    std::uint8_t& operator[](std::size_t i) { return bits_[i]; }

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    bool operator==(const TruthTable&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint8_t> bits_;
};

// Every output bit independently uniform.
TruthTable random_table(int n, Rng& rng);

// Pointwise XOR; the operands must have the same variable count.
TruthTable xor_tables(const TruthTable& a, const TruthTable& b);

// Parity x_1 ^ ... ^ x_n.
TruthTable sigma1(int n);

// Elementary symmetric function of degree 2: the XOR of all products
// x_i x_j with i < j, equivalently C(wt(x), 2) mod 2.
TruthTable sigma2(int n);

// For odd-n f, the (n+1)-variable table of f(x) ^ sigma2(x) ^ sigma1(x)*y
// with y as the new most significant index variable.
TruthTable extend_odd(const TruthTable& f);

// Text form: the bit string f(0) f(1) ... f(2^n - 1) read as a big-endian
// binary number and written as exactly 2^(n-2) lowercase hex digits.
// Defined for n >= 2; n is recovered from the digit count on parse.
std::string to_hex(const TruthTable& f);
TruthTable parse_hex(std::string_view hex);

}  // namespace nbs
