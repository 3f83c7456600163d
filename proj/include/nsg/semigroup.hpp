#pragma once

// Numerical semigroups over the nonnegative integers: construction from a
// generator specification (optionally with a tail threshold), membership,
// gaps and structural queries.
//
// Canonical representation: a membership bitmap over [0, c+m) together with
// the conductor c, the multiplicity m and the minimal generating set. Every
// other invariant in this library is derived from it.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/error.hpp"

namespace nsg {

// A generator specification: a set of positive generators plus an optional
// threshold r meaning "all integers >= r belong". Textual grammar:
//   g1,g2,...,gk[;r]        e.g. "30,42,51;290", "2,3", ";7"
// Generators may be redundant (non-minimal); they are reduced on build.
// Without a threshold the generators must have gcd 1, otherwise the
// complement would be infinite.
struct GeneratorSpec {
    std::vector<std::int64_t> generators;
    std::optional<std::int64_t> threshold;

    // Throws Error{EmptySpec|ZeroGenerator|NonCoprime|BadParams}.
    void validate() const;

    static GeneratorSpec parse(std::string_view text);
    std::string to_string() const;
};

class NumericalSemigroup {
public:
    // Builds the smallest additively closed subset of N containing 0, the
    // generators, and (if a threshold r is given) every integer >= r.
    // Without a threshold the sieve bound doubles from 4*max(generators)
    // until m consecutive members appear; gcd = 1 guarantees termination.
    static NumericalSemigroup build(const GeneratorSpec& spec);
    static NumericalSemigroup from_string(std::string_view text);

    std::int64_t multiplicity() const { return m_; }   // min of the nonzero elements
    std::int64_t conductor() const { return c_; }      // max gap + 1 (0 for N)
    std::int64_t frobenius() const { return c_ - 1; }  // -1 for N
    bool is_trivial() const { return c_ == 0; }        // the full monoid N

    const std::vector<std::int64_t>& min_generators() const { return min_gens_; }
    std::int64_t embedding_dimension() const {
        return static_cast<std::int64_t>(min_gens_.size());
    }

    // Membership; false for negative x, bitmap below c+m, true from c on.
    bool contains(std::int64_t x) const;

    // Smallest member strictly greater than s (s >= 0).
    std::int64_t next_element(std::int64_t s) const;

    std::vector<std::int64_t> gaps() const;            // N \ S, increasing
    std::vector<std::int64_t> small_elements() const;  // S cap [0, c), increasing
    std::int64_t small_count() const;                  // |S cap [0, c)|

    // Bitmap over [0, c+m).
    const std::vector<bool>& membership() const { return member_; }

    // Order-independent digest of (conductor, small elements); used by the
    // sweep to dedupe without retaining bitmaps.
    std::uint64_t digest() const;

private:
    NumericalSemigroup() = default;

    std::vector<bool> member_;
    std::int64_t c_ = 0;
    std::int64_t m_ = 1;
    std::vector<std::int64_t> min_gens_;
};

// True iff both sides denote the same subset of N (same conductor and the
// same elements below it).
bool equals(const NumericalSemigroup& a, const NumericalSemigroup& b);

}  // namespace nsg
