#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nbs/truth_table.hpp"

namespace nbs {

// Walsh-Hadamard spectrum: values[idx(a)] is the correlation of f with the
// linear function a.x. Values share the parity of 2^n and satisfy
// sum_a W(a)^2 = 2^(2n).
struct WalshSpectrum {
    int n = 0;
    std::vector<std::int32_t> values;
};

// Exact complex integer. Components stay within +-2^n for every transform
// this library runs (n <= 20), so 32-bit parts with 64-bit squared norms
// never round or overflow.
struct GaussianInt {
    std::int32_t re = 0;
    std::int32_t im = 0;

    friend GaussianInt operator+(GaussianInt a, GaussianInt b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInt operator-(GaussianInt a, GaussianInt b) {
        return {a.re - b.re, a.im - b.im};
    }
    bool operator==(const GaussianInt&) const = default;

    std::int64_t norm_sq() const {
        return std::int64_t{re} * re + std::int64_t{im} * im;
    }
};

struct NegaSpectrum {
    int n = 0;
    std::vector<GaussianInt> values;
};

// In-place butterfly: out[a] = sum_x (-1)^(a.x) in[x] in O(n 2^n)
// additions. The pairs within a stage are independent, so large transforms
// fan out over OpenMP; inside an already-parallel region the inner pragma
// degrades to serial on its own (nested parallelism stays disabled).
template <typename T>
void hadamard_inplace(std::span<T> v, bool parallel = true) {
    const std::size_t sz = v.size();
    const long long pairs = static_cast<long long>(sz / 2);
    for (std::size_t bs = 1; bs < sz; bs <<= 1) {
#pragma omp parallel for schedule(static) if (parallel && sz >= (std::size_t{1} << 16))
        for (long long p = 0; p < pairs; ++p) {
            const std::size_t q = static_cast<std::size_t>(p);
            const std::size_t lo = ((q & ~(bs - 1)) << 1) | (q & (bs - 1));
            const T a = v[lo];
            const T b = v[lo + bs];
            v[lo] = a + b;
            v[lo + bs] = a - b;
        }
    }
}

WalshSpectrum wht(const TruthTable& f);

// Nega-Hadamard spectrum, computed exactly as the Walsh-Hadamard transform
// of g(x) = (-1)^f(x) * i^wt(x) over the Gaussian integers.
NegaSpectrum nega_transform(const TruthTable& f);

// Hamming distance to the nearest affine function.
int nonlinearity(const WalshSpectrum& ws);

// Upper limit 2^(n-1) - 2^(n/2-1) on nonlinearity; attainable (and defined
// here) for even n >= 2 only.
int covering_bound(int n);

struct SpectrumPeak {
    std::int32_t max_abs = 0;
    std::int32_t count = 0;
};

// Largest absolute spectrum value and how often it occurs.
SpectrumPeak max_abs_count(std::span<const std::int32_t> values);
SpectrumPeak max_abs_count(const WalshSpectrum& ws);

}  // namespace nbs
