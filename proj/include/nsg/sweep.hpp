#pragma once

// Grid enumeration over parameterized semigroup families: build
// <fixed ∪ assignment>_r for every grid point, filter by a predicate on the
// invariant report, optionally collapse equal semigroups, and emit rows in
// a deterministic order regardless of the degree of parallelism.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nsg/invariants.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

// Inclusive integer range.
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    std::int64_t size() const { return hi - lo + 1; }
    bool operator==(const IntRange&) const = default;
};

enum class PredicateKind { EliahouNegative, EliahouIn, HighlyDense, All };

struct Predicate {
    PredicateKind kind = PredicateKind::All;
    std::int64_t lo = 0;  // bounds for EliahouIn
    std::int64_t hi = 0;

    bool matches(const InvariantReport& r) const;

    // "eliahou_negative" | "highly_dense" | "all" | "eliahou_in(lo,hi)"
    static Predicate parse(const std::string& text);
    std::string to_string() const;
};

struct SweepSpec {
    std::vector<std::int64_t> fixed_generators;
    std::vector<IntRange> variable_slots;  // one per varying generator
    IntRange threshold_range;
    Predicate predicate;
    bool dedupe = true;

    void validate() const;          // throws SpecInvalid
    std::int64_t grid_size() const; // product of all range sizes

    static SweepSpec from_json(const nlohmann::json& j);
    nlohmann::ordered_json to_json() const;
};

struct SweepRow {
    std::vector<std::int64_t> point_generators;  // fixed ++ slot assignment
    std::int64_t threshold = 0;
    InvariantReport report;
};

struct SweepResult {
    std::vector<SweepRow> rows;     // sorted by (threshold, generator tuple)
    std::int64_t grid_size = 0;
    std::int64_t raw_hits = 0;      // predicate matches before dedup
    std::int64_t distinct_hits = 0; // after dedup (== raw_hits when off)
};

// threads = 0 picks NSG_THREADS from the environment, falling back to the
// hardware concurrency. Results are byte-identical for any thread count.
SweepResult enumerate(const SweepSpec& spec, unsigned threads = 0);

// Streaming variant: rows that pass the predicate are handed to the sink in
// grid order, i.e. already sorted by (threshold, generator tuple), holding
// only a bounded block of the grid in memory. Ignores spec.dedupe (rows are
// emitted as found); returns the number of rows emitted.
std::int64_t enumerate_streaming(const SweepSpec& spec,
                                 const std::function<void(const SweepRow&)>& sink,
                                 unsigned threads = 0);

// The two built-in search grids: four generators, two of them varying, with
// a varying tail threshold, keeping semigroups with negative Eliahou number.
SweepSpec builtin_type1();  // fixed {100,170}, slots [171,180]^2, thresholds [593,602]
SweepSpec builtin_type2();  // fixed {100,270}, slots [271,280]^2, thresholds [993,1005]

// The eight reference rows shipped with this project, as generator specs.
std::vector<GeneratorSpec> builtin_table1();

enum class Family { Type1, Type2, Other };

std::string_view to_string(Family f);

// Labels a row by the two built-in family shapes, including their side
// conditions (e_s in {3,4}; conductor above 5m resp. 9m).
Family classify_family(const SweepRow& row);

}  // namespace nsg
