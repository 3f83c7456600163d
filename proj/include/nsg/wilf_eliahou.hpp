#pragma once

// The two central functionals: the Wilf function W(k) = k*delta - c with its
// nonnegativity threshold mu, and the Eliahou number
// E = e_s*delta - q*|d_q| + nu.

#include <cstdint>

#include "nsg/semigroup.hpp"

namespace nsg {

// W(k) = k*delta - c. Linear in k with slope delta.
std::int64_t wilf(const NumericalSemigroup& s, std::int64_t k);

// Least k with W(k) >= 0: ceil(c/delta) for delta >= 1, and 0 for N.
// Always within [2, m] for a nontrivial semigroup.
std::int64_t mu(const NumericalSemigroup& s);

// E = e_s*delta - q*|d_q| + nu, where d_q is the set of non-generators in
// the window [c, c+m). That window has exactly m integers, so
// |d_q| = m - e_c. Errors with TrivialSemigroup for N.
std::int64_t eliahou(const NumericalSemigroup& s);

// The family <m, q*m+1, ..., q*m+(m-1)> for m > 1, q > 0: it has
// delta = q = L+1, conductor q*m, and attains the concentration-based
// delta lower bound with equality. For q = 1 it degenerates to {0, m, ->}.
NumericalSemigroup w_mq(std::int64_t m, std::int64_t q);

}  // namespace nsg
