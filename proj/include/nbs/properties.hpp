#pragma once

#include "nbs/transforms.hpp"

namespace nbs {

// Flat Walsh spectrum at magnitude 2^(n/2). Even n only; odd n returns
// false since the bound is not attainable there.
bool is_bent(const TruthTable& f);

// Flat nega spectrum: |N(a)|^2 == 2^n for every a. The comparison runs on
// exact squared norms, so odd n (where 2^(n/2) is irrational) never
// touches floating point.
bool is_negabent_direct(const TruthTable& f);

// Negabentness via bentness of a related function: f ^ sigma2 for even n,
// the (n+1)-variable extension for odd n. This is the cheap test the
// search loop uses; is_negabent_direct stays available as the independent
// certificate.
bool is_negabent_reduced(const TruthTable& f);

// Simultaneously bent and negabent (reduced test); even n required.
bool is_bent_negabent(const TruthTable& f);

// Algebraic normal form coefficients via the binary Moebius transform.
std::vector<std::uint8_t> anf(const TruthTable& f);

// Largest Hamming weight of a monomial with nonzero ANF coefficient;
// constant functions have degree 0.
int anf_degree(const TruthTable& f);

}  // namespace nbs
