#include "nsg/wilf_eliahou.hpp"

#include "nsg/invariants.hpp"

namespace nsg {

std::int64_t wilf(const NumericalSemigroup& s, std::int64_t k) {
    return k * delta(s) - s.conductor();
}

std::int64_t mu(const NumericalSemigroup& s) {
    const std::int64_t d = delta(s);
    if (d == 0) return 0;  // N: W is identically 0
    return (s.conductor() + d - 1) / d;
}

std::int64_t eliahou(const NumericalSemigroup& s) {
    if (s.is_trivial())
        throw Error(Error::Kind::TrivialSemigroup,
                    "the Eliahou number is undefined for the full monoid N");
    const GeneratorSplit split = generator_split(s);
    const PartitionProfile p = partition_profile(s);
    return split.e_s * delta(s) - p.q * split.d_q + p.nu;
}

NumericalSemigroup w_mq(std::int64_t m, std::int64_t q) {
    if (m <= 1 || q <= 0)
        throw Error(Error::Kind::BadParams, "w_mq requires m > 1 and q > 0");
    GeneratorSpec spec;
    spec.generators.push_back(m);
    for (std::int64_t i = 1; i < m; ++i) spec.generators.push_back(q * m + i);
    return NumericalSemigroup::build(spec);
}

}  // namespace nsg
