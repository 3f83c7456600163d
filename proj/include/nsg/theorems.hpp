#pragma once

// Inequality checks between the invariants, each packaged as an executable
// verdict (hypotheses -> conclusion) with the entering values as witness,
// plus a seeded random-semigroup stream for fuzz verification. Every check
// is a proved statement: a verdict whose hypotheses hold but whose
// conclusion fails (a falsification) always indicates an implementation
// bug, never mathematics.

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "nsg/invariants.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

enum class TheoremId {
    P3_3,   // delta >= ((L-1)m + rho)/k + 1, k the concentration
    P3_4,   // c > 2m  =>  e_s >= m/k
    P3_5,   // c > 2m  =>  W(2k) >= 0 and 2k >= mu
    P3_6,   // delta >= m - k  =>  W(k+1) >= 0 and k+1 >= mu
    T4_1,   // W(e) >= E >= W(e_s)
    T4_2,   // E < 0  =>  W(e) < e_c*delta and mu > e_s
    T4_3,   // c > 2m and m(L-1) > k^2(L+1)  =>  E >= 0
    C4_4,   // E < 0  =>  m(L-1) < k^2(L+1)
    D5_HD,  // membership in the highly dense class (definition, no conclusion to violate)
    P5_1,   // highly dense and c > 2m  =>  W(e) >= 0
    C5_2,   // k >= 2, c > 2m, e_s >= 2k  =>  E >= 0
    C5_3,   // k >= 2, e_s >= k+1, delta >= m-k, c > 2m  =>  E >= 0
};

std::string_view to_string(TheoremId id);

struct TheoremVerdict {
    TheoremId id{};
    bool hypotheses_met = false;
    // Present iff the hypotheses are met.
    std::optional<bool> conclusion_holds;
    // The invariant values entering the statement, in a fixed order.
    std::vector<std::pair<std::string, std::int64_t>> witness;

    bool falsified() const {
        return hypotheses_met && conclusion_holds.has_value() && !*conclusion_holds;
    }
};

// All rational inequalities are evaluated by integer cross-multiplication;
// there is no floating point in any check. Each checker errors with
// TrivialSemigroup for N. The verdicts record witness values even when the
// hypotheses fail, so near-misses can be inspected.
TheoremVerdict check_P3_3(const NumericalSemigroup& s);
TheoremVerdict check_P3_4(const NumericalSemigroup& s);
// The c > 2m hypothesis is required here even though the conclusion is
// usually stated without it: {0,3,->} has W(2) = -1.
TheoremVerdict check_P3_5(const NumericalSemigroup& s);
TheoremVerdict check_P3_6(const NumericalSemigroup& s);
TheoremVerdict check_T4_1(const NumericalSemigroup& s);
TheoremVerdict check_T4_2(const NumericalSemigroup& s);
TheoremVerdict check_T4_3(const NumericalSemigroup& s);
TheoremVerdict check_C4_4(const NumericalSemigroup& s);
TheoremVerdict check_D5_HD(const NumericalSemigroup& s);
TheoremVerdict check_P5_1(const NumericalSemigroup& s);
TheoremVerdict check_C5_2(const NumericalSemigroup& s);
TheoremVerdict check_C5_3(const NumericalSemigroup& s);

// One verdict per TheoremId, in declaration order. The shared invariant
// report is computed once.
std::vector<TheoremVerdict> check_all(const NumericalSemigroup& s);
std::vector<TheoremVerdict> check_all(const NumericalSemigroup& s, const InvariantReport& r);

struct FuzzParams {
    std::uint64_t seed = 42;
    std::int64_t max_multiplicity = 50;
    std::int64_t max_generators = 8;
    double threshold_probability = 0.5;  // chance of adding a tail threshold
    std::int64_t count = 100;

    void validate() const;  // throws BadParams
};

// Deterministic per seed; every produced semigroup is nontrivial, has a
// gcd-1 generator set (a coprime generator is appended when needed), and
// carries a threshold r in [2m, 15m] with the configured probability.
class RandomSemigroupStream {
public:
    explicit RandomSemigroupStream(FuzzParams params);

    GeneratorSpec next_spec();
    NumericalSemigroup next();

private:
    std::uint64_t next_u64();
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive
    bool bernoulli(double p);

    FuzzParams params_;
    std::mt19937_64 engine_;
};

}  // namespace nsg
