#include "nsg/invariants.hpp"

#include <algorithm>

#include "nsg/wilf_eliahou.hpp"

namespace nsg {
namespace {

void require_nontrivial(const NumericalSemigroup& s, const char* what) {
    if (s.is_trivial())
        throw Error(Error::Kind::TrivialSemigroup,
                    std::string(what) + " is undefined for the full monoid N");
}

}  // namespace

std::vector<std::int64_t> AperySet::sorted() const {
    std::vector<std::int64_t> w = by_class;
    std::sort(w.begin(), w.end());
    return w;
}

std::int64_t AperySet::max() const {
    return *std::max_element(by_class.begin(), by_class.end());
}

AperySet apery(const NumericalSemigroup& s, std::int64_t base) {
    if (base <= 0 || !s.contains(base))
        throw Error(Error::Kind::BaseNotInSemigroup,
                    "Apery base must be a nonzero element of the semigroup");
    AperySet ap;
    ap.base = base;
    ap.by_class.assign(static_cast<std::size_t>(base), -1);
    std::int64_t filled = 0;
    // Every residue class has a representative below c + base.
    for (std::int64_t x = 0; filled < base; ++x) {
        if (!s.contains(x)) continue;
        auto& slot = ap.by_class[static_cast<std::size_t>(x % base)];
        if (slot < 0) {
            slot = x;
            ++filled;
        }
    }
    return ap;
}

std::int64_t delta(const NumericalSemigroup& s) { return s.small_count(); }

std::int64_t delta_via_apery(const NumericalSemigroup& s) {
    require_nontrivial(s, "delta_via_apery");
    const std::int64_t m = s.multiplicity();
    const std::int64_t c = s.conductor();
    const std::int64_t rho = c - ((c - 1) / m) * m;
    const AperySet ap = apery(s, m);
    std::int64_t sum = 0;
    for (std::int64_t w : ap.by_class) sum += w / m;
    return m * (ap.max() / m) - sum + rho - m;
}

std::vector<std::int64_t> eta(const NumericalSemigroup& s) {
    require_nontrivial(s, "eta");
    const std::int64_t m = s.multiplicity();
    const std::vector<std::int64_t> w = apery(s, m).sorted();
    std::vector<std::int64_t> out(static_cast<std::size_t>(m - 1));
    for (std::int64_t j = 1; j < m; ++j)
        out[static_cast<std::size_t>(j - 1)] =
            w[static_cast<std::size_t>(j)] / m - w[static_cast<std::size_t>(j - 1)] / m;
    return out;
}

std::int64_t concentration(const NumericalSemigroup& s) {
    if (s.is_trivial()) return 1;
    const std::int64_t c = s.conductor();
    std::int64_t best = 1;
    std::int64_t prev = s.multiplicity();
    // Beyond the conductor every jump is 1, so stop at c.
    while (prev < c) {
        const std::int64_t nxt = s.next_element(prev);
        best = std::max(best, nxt - prev);
        prev = nxt;
    }
    return best;
}

PartitionProfile partition_profile(const NumericalSemigroup& s) {
    require_nontrivial(s, "partition_profile");
    const std::int64_t m = s.multiplicity();
    const std::int64_t c = s.conductor();

    PartitionProfile p;
    p.l = (c - 1) / m;
    p.rho = c - p.l * m;
    p.q = (c + m - 1) / m;
    p.nu = p.q * m - c;
    p.eta = eta(s);

    p.n_alpha.assign(static_cast<std::size_t>(p.l + 1), 0);
    for (std::int64_t alpha = 0; alpha <= p.l; ++alpha) {
        const std::int64_t hi = std::min((alpha + 1) * m, c);
        std::int64_t n = 0;
        for (std::int64_t x = alpha * m; x < hi; ++x) n += s.contains(x) ? 1 : 0;
        p.n_alpha[static_cast<std::size_t>(alpha)] = n;
    }

    for (std::int64_t alpha = 0; alpha <= p.l; ++alpha)
        p.blocks_i.push_back({alpha * m, (alpha + 1) * m});
    for (std::int64_t alpha = 0; alpha <= p.q; ++alpha)
        p.blocks_j.push_back({std::max<std::int64_t>(alpha * m - p.nu, 0), (alpha + 1) * m - p.nu});
    return p;
}

GeneratorSplit generator_split(const NumericalSemigroup& s) {
    require_nontrivial(s, "generator_split");
    const std::int64_t c = s.conductor();
    GeneratorSplit split;
    for (std::int64_t a : s.min_generators()) {
        if (a < c)
            ++split.e_s;
        else
            ++split.e_c;  // all minimal generators lie below c + m
    }
    split.d_q = s.multiplicity() - split.e_c;
    return split;
}

std::vector<std::int64_t> pseudo_frobenius(const NumericalSemigroup& s) {
    require_nontrivial(s, "pseudo_frobenius");
    std::vector<std::int64_t> out;
    for (std::int64_t g : s.gaps()) {
        bool pf = true;
        for (std::int64_t a : s.min_generators()) {
            if (!s.contains(g + a)) {
                pf = false;
                break;
            }
        }
        if (pf) out.push_back(g);
    }
    return out;
}

std::int64_t type_of(const NumericalSemigroup& s) {
    return static_cast<std::int64_t>(pseudo_frobenius(s).size());
}

bool is_symmetric(const NumericalSemigroup& s) {
    require_nontrivial(s, "is_symmetric");
    const std::int64_t f = s.frobenius();
    for (std::int64_t g : s.gaps()) {
        if (!s.contains(f - g)) return false;
    }
    return true;
}

bool is_pseudo_symmetric(const NumericalSemigroup& s) {
    require_nontrivial(s, "is_pseudo_symmetric");
    const std::int64_t f = s.frobenius();
    if (f % 2 != 0) return false;
    for (std::int64_t g : s.gaps()) {
        if (g == f / 2) continue;
        if (!s.contains(f - g)) return false;
    }
    return true;
}

bool is_highly_dense(std::int64_t concentration, std::int64_t embedding_dimension) {
    if (concentration <= 2) return true;
    return embedding_dimension >= 4 && 2 * concentration <= embedding_dimension;
}

bool is_highly_dense(const NumericalSemigroup& s) {
    require_nontrivial(s, "is_highly_dense");
    return is_highly_dense(concentration(s), s.embedding_dimension());
}

InvariantReport report(const NumericalSemigroup& s) {
    InvariantReport r;
    r.generators = s.min_generators();
    r.min_generators = s.min_generators();
    r.m = s.multiplicity();
    r.c = s.conductor();
    r.f = s.frobenius();
    r.e = s.embedding_dimension();
    r.delta = delta(s);
    r.concentration = concentration(s);
    r.mu = mu(s);
    r.wilf_e = wilf(s, r.e);
    r.wilf_mu = wilf(s, r.mu);
    if (s.is_trivial()) return r;

    const GeneratorSplit split = generator_split(s);
    const PartitionProfile p = partition_profile(s);
    r.e_s = split.e_s;
    r.e_c = split.e_c;
    r.q = p.q;
    r.nu = p.nu;
    r.l = p.l;
    r.rho = p.rho;
    r.eliahou = eliahou(s);
    r.wilf_es = wilf(s, split.e_s);
    r.type = type_of(s);
    r.symmetric = is_symmetric(s);
    r.pseudo_symmetric = is_pseudo_symmetric(s);
    r.highly_dense = is_highly_dense(r.concentration, r.e);
    return r;
}

InvariantReport report(const GeneratorSpec& spec) {
    InvariantReport r = report(NumericalSemigroup::build(spec));
    r.generators = spec.generators;
    r.threshold = spec.threshold;
    return r;
}

}  // namespace nsg
