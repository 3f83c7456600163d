#pragma once

// Classical invariants of a numerical semigroup plus the block/partition
// quantities used throughout this library: Apery sets, the delta invariant
// (count of members below the conductor), eta block counts, concentration,
// the q/nu/L/rho profile, the small/window generator split, pseudo-Frobenius
// elements and symmetry flags, and an aggregated report.

#include <cstdint>
#include <optional>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

// Apery set with respect to a nonzero element s: the s smallest members,
// one per residue class mod s. by_class[i] is the least member congruent
// to i (mod s); the identities on blocks index the set in increasing order
// instead, which sorted() provides. For s = m the largest element equals
// c + m - 1.
struct AperySet {
    std::int64_t base = 0;
    std::vector<std::int64_t> by_class;

    std::vector<std::int64_t> sorted() const;
    std::int64_t max() const;
};

AperySet apery(const NumericalSemigroup& s, std::int64_t base);

// Number of members strictly below the conductor (0 for N).
std::int64_t delta(const NumericalSemigroup& s);

// Same quantity computed from the Apery set with respect to m:
//   delta = m*floor(w_max/m) - sum_j floor(w_j/m) + rho - m.
// Errors with TrivialSemigroup for N.
std::int64_t delta_via_apery(const NumericalSemigroup& s);

// eta[j-1] = number of blocks [alpha*m, (alpha+1)*m) containing exactly j
// members, for j = 1..m-1; computed as floor(w_j/m) - floor(w_{j-1}/m) over
// the sorted Apery set.
std::vector<std::int64_t> eta(const NumericalSemigroup& s);

// Largest jump next(s) - s over nonzero members s (1 for N and for
// {0, m, ->}); always within [1, m].
std::int64_t concentration(const NumericalSemigroup& s);

// Half-open integer interval [lo, hi).
struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool operator==(const Interval&) const = default;
};

// Block decomposition data: c = L*m + rho with 2 <= rho <= m, q = ceil(c/m),
// nu = q*m - c, and q = L + 1. blocks_i are the L+1 length-m blocks
// [alpha*m, (alpha+1)*m); blocks_j are the q+1 shifted blocks
// [alpha*m - nu, (alpha+1)*m - nu), the last of which is the window
// [c, c+m). n_alpha[alpha] counts members below c in blocks_i[alpha].
struct PartitionProfile {
    std::int64_t l = 0;
    std::int64_t rho = 0;
    std::int64_t q = 0;
    std::int64_t nu = 0;
    std::vector<std::int64_t> eta;      // eta_1 .. eta_{m-1}
    std::vector<std::int64_t> n_alpha;  // n_0 .. n_L
    std::vector<Interval> blocks_i;
    std::vector<Interval> blocks_j;
};

PartitionProfile partition_profile(const NumericalSemigroup& s);

// e_s = minimal generators below c; e_c = minimal generators in [c, c+m);
// d_q = m - e_c = non-generators in that window. e_s + e_c = e.
struct GeneratorSplit {
    std::int64_t e_s = 0;
    std::int64_t e_c = 0;
    std::int64_t d_q = 0;
};

GeneratorSplit generator_split(const NumericalSemigroup& s);

// Gaps x with x + a a member for every minimal generator a (equivalently,
// for every nonzero member). The Frobenius number is always one of them.
std::vector<std::int64_t> pseudo_frobenius(const NumericalSemigroup& s);
std::int64_t type_of(const NumericalSemigroup& s);

// Symmetric: every gap g has f - g a member. Pseudo-symmetric: f is even
// and every gap g != f/2 has f - g a member.
bool is_symmetric(const NumericalSemigroup& s);
bool is_pseudo_symmetric(const NumericalSemigroup& s);

// Concentration at most 2, or concentration at most e/2 with e >= 4.
bool is_highly_dense(std::int64_t concentration, std::int64_t embedding_dimension);
bool is_highly_dense(const NumericalSemigroup& s);

// One semigroup's full invariant vector. Fields that are undefined for the
// full monoid N are optional and left empty there.
struct InvariantReport {
    std::vector<std::int64_t> generators;  // as specified on input
    std::optional<std::int64_t> threshold;
    std::vector<std::int64_t> min_generators;

    std::int64_t m = 0;
    std::int64_t c = 0;
    std::int64_t f = 0;
    std::int64_t e = 0;
    std::int64_t delta = 0;
    std::int64_t concentration = 0;
    std::int64_t mu = 0;
    std::int64_t wilf_e = 0;   // W(e) = e*delta - c
    std::int64_t wilf_mu = 0;  // W(mu)

    std::optional<std::int64_t> e_s, e_c;
    std::optional<std::int64_t> q, nu, l, rho;
    std::optional<std::int64_t> eliahou;
    std::optional<std::int64_t> wilf_es;  // W(e_s)
    std::optional<std::int64_t> type;
    std::optional<bool> symmetric, pseudo_symmetric, highly_dense;
};

InvariantReport report(const NumericalSemigroup& s);
// Keeps the input generators/threshold in the report for identification.
InvariantReport report(const GeneratorSpec& spec);

}  // namespace nsg
