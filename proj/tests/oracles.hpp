#pragma once

// Test-only oracles: brute-force routes for quantities the library computes
// by smarter means. Kept independent of the implementation paths they check
// (fixed sieve bound instead of doubling, direct block counting instead of
// Apery arithmetic, linear scan instead of closed forms).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg::testing {

// Additive closure of {0} union gens over [0, bound), by forward
// propagation (outer loop over positions, not over generators).
inline std::vector<bool> brute_closure(const std::vector<std::int64_t>& gens,
                                       std::int64_t bound) {
    std::vector<bool> in(static_cast<std::size_t>(bound), false);
    in[0] = true;
    for (std::int64_t x = 0; x < bound; ++x) {
        if (!in[static_cast<std::size_t>(x)]) continue;
        for (std::int64_t g : gens) {
            if (x + g < bound) in[static_cast<std::size_t>(x + g)] = true;
        }
    }
    return in;
}

// Conductor of the semigroup generated by a gcd-1 set, from a single fixed
// sieve over [0, min*max + min + 1]. Returns -1 if no full run of min(gens)
// consecutive members shows up inside the bound (never happens for the
// generator distributions used in the tests).
inline std::int64_t brute_conductor(std::vector<std::int64_t> gens) {
    std::sort(gens.begin(), gens.end());
    const std::int64_t m = gens.front();
    const std::int64_t bound = m * gens.back() + m + 1;
    const std::vector<bool> in = brute_closure(gens, bound);
    std::int64_t run = 0;
    bool closes = false;
    std::int64_t last_gap = -1;
    for (std::int64_t x = 0; x < bound; ++x) {
        if (in[static_cast<std::size_t>(x)]) {
            if (++run >= m) closes = true;
        } else {
            run = 0;
            last_gap = x;
        }
    }
    if (!closes) return -1;
    return last_gap + 1;
}

// eta_j = number of blocks [alpha*m, (alpha+1)*m) holding exactly j members,
// counted directly off the membership bitmap, j = 1..m-1.
inline std::vector<std::int64_t> brute_eta(const NumericalSemigroup& s) {
    const std::int64_t m = s.multiplicity();
    const std::int64_t c = s.conductor();
    const std::int64_t blocks = (c - 1) / m + 1;  // alpha = 0..L
    std::vector<std::int64_t> out(static_cast<std::size_t>(m - 1), 0);
    for (std::int64_t alpha = 0; alpha < blocks; ++alpha) {
        std::int64_t members = 0;
        for (std::int64_t x = alpha * m; x < (alpha + 1) * m; ++x)
            members += s.contains(x) ? 1 : 0;
        if (members >= 1 && members <= m - 1) ++out[static_cast<std::size_t>(members - 1)];
    }
    return out;
}

// Least k with k*delta - c >= 0, by scanning k upward.
inline std::int64_t brute_mu(const NumericalSemigroup& s) {
    const std::int64_t d = s.small_count();
    const std::int64_t c = s.conductor();
    for (std::int64_t k = 0;; ++k) {
        if (k * d - c >= 0) return k;
        if (d == 0) return 0;
    }
}

// Random gcd-1 generator spec for property tests; independent of the
// library's fuzz stream.
inline GeneratorSpec random_spec(std::mt19937_64& rng, std::int64_t max_m,
                                 bool allow_threshold = true) {
    GeneratorSpec spec;
    const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_m - 1));
    spec.generators.push_back(m);
    const std::int64_t extras = 1 + static_cast<std::int64_t>(rng() % 5);
    for (std::int64_t i = 0; i < extras; ++i)
        spec.generators.push_back(m + 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(3 * m)));
    if (allow_threshold && rng() % 2 == 0)
        spec.threshold = 2 * m + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(13 * m));
    std::int64_t g = 0;
    for (std::int64_t x : spec.generators) g = std::gcd(g, x);
    while (g != 1) {
        const std::int64_t x = m + 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(5 * m));
        if (std::gcd(g, x) == 1) {
            spec.generators.push_back(x);
            g = 1;
        }
    }
    return spec;
}

}  // namespace nsg::testing
