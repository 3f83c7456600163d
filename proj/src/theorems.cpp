#include "nsg/theorems.hpp"

#include <numeric>

#include "nsg/wilf_eliahou.hpp"

namespace nsg {
namespace {

struct Ctx {
    std::int64_t m, c, e, e_s, e_c, d, k, l, rho, q, nu, mu_v, eli;

    explicit Ctx(const InvariantReport& r)
        : m(r.m),
          c(r.c),
          e(r.e),
          e_s(*r.e_s),
          e_c(*r.e_c),
          d(r.delta),
          k(r.concentration),
          l(*r.l),
          rho(*r.rho),
          q(*r.q),
          nu(*r.nu),
          mu_v(r.mu),
          eli(*r.eliahou) {}

    std::int64_t wilf(std::int64_t x) const { return x * d - c; }
    bool highly_dense() const { return is_highly_dense(k, e); }
};

Ctx make_ctx(const NumericalSemigroup& s) {
    if (s.is_trivial())
        throw Error(Error::Kind::TrivialSemigroup,
                    "theorem checks are undefined for the full monoid N");
    return Ctx(report(s));
}

Ctx make_ctx(const NumericalSemigroup& s, const InvariantReport& r) {
    if (s.is_trivial())
        throw Error(Error::Kind::TrivialSemigroup,
                    "theorem checks are undefined for the full monoid N");
    return Ctx(r);
}

using Witness = std::vector<std::pair<std::string, std::int64_t>>;

TheoremVerdict verdict(TheoremId id, bool hyp, bool concl, Witness w) {
    TheoremVerdict v;
    v.id = id;
    v.hypotheses_met = hyp;
    if (hyp) v.conclusion_holds = concl;
    v.witness = std::move(w);
    return v;
}

TheoremVerdict p3_3(const Ctx& x) {
    // delta - 1 >= ((L-1)m + rho)/k, cross-multiplied by k > 0.
    const bool concl = x.k * (x.d - 1) >= (x.l - 1) * x.m + x.rho;
    return verdict(TheoremId::P3_3, true, concl,
                   {{"m", x.m},
                    {"c", x.c},
                    {"k", x.k},
                    {"L", x.l},
                    {"rho", x.rho},
                    {"delta", x.d}});
}

TheoremVerdict p3_4(const Ctx& x) {
    const bool hyp = x.c > 2 * x.m;
    const bool concl = x.e_s * x.k >= x.m;
    return verdict(TheoremId::P3_4, hyp, concl,
                   {{"m", x.m}, {"c", x.c}, {"k", x.k}, {"e_s", x.e_s}});
}

TheoremVerdict p3_5(const Ctx& x) {
    const bool hyp = x.c > 2 * x.m;
    const std::int64_t w2k = x.wilf(2 * x.k);
    const bool concl = w2k >= 0 && 2 * x.k >= x.mu_v;
    return verdict(TheoremId::P3_5, hyp, concl,
                   {{"m", x.m},
                    {"c", x.c},
                    {"k", x.k},
                    {"delta", x.d},
                    {"mu", x.mu_v},
                    {"wilf_2k", w2k}});
}

TheoremVerdict p3_6(const Ctx& x) {
    const bool hyp = x.d >= x.m - x.k;
    const std::int64_t wk1 = x.wilf(x.k + 1);
    const bool concl = wk1 >= 0 && x.k + 1 >= x.mu_v;
    return verdict(TheoremId::P3_6, hyp, concl,
                   {{"m", x.m},
                    {"k", x.k},
                    {"delta", x.d},
                    {"mu", x.mu_v},
                    {"wilf_k_plus_1", wk1}});
}

TheoremVerdict t4_1(const Ctx& x) {
    const std::int64_t we = x.wilf(x.e);
    const std::int64_t wes = x.wilf(x.e_s);
    const bool concl = we >= x.eli && x.eli >= wes;
    return verdict(TheoremId::T4_1, true, concl,
                   {{"e", x.e},
                    {"e_s", x.e_s},
                    {"delta", x.d},
                    {"c", x.c},
                    {"wilf_e", we},
                    {"eliahou", x.eli},
                    {"wilf_es", wes}});
}

TheoremVerdict t4_2(const Ctx& x) {
    const bool hyp = x.eli < 0;
    const std::int64_t we = x.wilf(x.e);
    const bool concl = we < x.e_c * x.d && x.mu_v > x.e_s;
    return verdict(TheoremId::T4_2, hyp, concl,
                   {{"eliahou", x.eli},
                    {"wilf_e", we},
                    {"e_c", x.e_c},
                    {"delta", x.d},
                    {"mu", x.mu_v},
                    {"e_s", x.e_s}});
}

TheoremVerdict t4_3(const Ctx& x) {
    // m/k^2 > (L+1)/(L-1) cross-multiplied; c > 2m guarantees L >= 2.
    const std::int64_t lhs = x.m * (x.l - 1);
    const std::int64_t rhs = x.k * x.k * (x.l + 1);
    const bool hyp = x.c > 2 * x.m && lhs > rhs;
    const bool concl = x.eli >= 0;
    return verdict(TheoremId::T4_3, hyp, concl,
                   {{"m", x.m},
                    {"c", x.c},
                    {"k", x.k},
                    {"L", x.l},
                    {"m_times_L_minus_1", lhs},
                    {"k2_times_L_plus_1", rhs},
                    {"eliahou", x.eli}});
}

TheoremVerdict c4_4(const Ctx& x) {
    const std::int64_t lhs = x.m * (x.l - 1);
    const std::int64_t rhs = x.k * x.k * (x.l + 1);
    const bool hyp = x.eli < 0;
    const bool concl = lhs < rhs;
    return verdict(TheoremId::C4_4, hyp, concl,
                   {{"m", x.m},
                    {"k", x.k},
                    {"L", x.l},
                    {"m_times_L_minus_1", lhs},
                    {"k2_times_L_plus_1", rhs},
                    {"eliahou", x.eli}});
}

TheoremVerdict d5_hd(const Ctx& x) {
    // A definition, not an implication; the "hypotheses" record class
    // membership and there is nothing to falsify.
    const bool hd = x.highly_dense();
    return verdict(TheoremId::D5_HD, hd, true,
                   {{"concentration", x.k},
                    {"e", x.e},
                    {"clause_small_concentration", x.k <= 2 ? 1 : 0},
                    {"clause_half_embedding", (x.e >= 4 && 2 * x.k <= x.e) ? 1 : 0}});
}

TheoremVerdict p5_1(const Ctx& x) {
    const bool hyp = x.highly_dense() && x.c > 2 * x.m;
    const std::int64_t we = x.wilf(x.e);
    const bool concl = we >= 0;
    return verdict(TheoremId::P5_1, hyp, concl,
                   {{"concentration", x.k},
                    {"e", x.e},
                    {"c", x.c},
                    {"m", x.m},
                    {"wilf_e", we},
                    {"highly_dense", x.highly_dense() ? 1 : 0}});
}

TheoremVerdict c5_2(const Ctx& x) {
    const bool hyp = x.k >= 2 && x.c > 2 * x.m && x.e_s >= 2 * x.k;
    const bool concl = x.eli >= 0;
    return verdict(TheoremId::C5_2, hyp, concl,
                   {{"k", x.k}, {"c", x.c}, {"m", x.m}, {"e_s", x.e_s}, {"eliahou", x.eli}});
}

TheoremVerdict c5_3(const Ctx& x) {
    const bool hyp = x.k >= 2 && x.e_s >= x.k + 1 && x.d >= x.m - x.k && x.c > 2 * x.m;
    const bool concl = x.eli >= 0;
    return verdict(TheoremId::C5_3, hyp, concl,
                   {{"k", x.k},
                    {"e_s", x.e_s},
                    {"delta", x.d},
                    {"m", x.m},
                    {"c", x.c},
                    {"eliahou", x.eli}});
}

}  // namespace

std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::P3_3: return "P3_3";
        case TheoremId::P3_4: return "P3_4";
        case TheoremId::P3_5: return "P3_5";
        case TheoremId::P3_6: return "P3_6";
        case TheoremId::T4_1: return "T4_1";
        case TheoremId::T4_2: return "T4_2";
        case TheoremId::T4_3: return "T4_3";
        case TheoremId::C4_4: return "C4_4";
        case TheoremId::D5_HD: return "D5_HD";
        case TheoremId::P5_1: return "P5_1";
        case TheoremId::C5_2: return "C5_2";
        case TheoremId::C5_3: return "C5_3";
    }
    return "unknown";
}

TheoremVerdict check_P3_3(const NumericalSemigroup& s) { return p3_3(make_ctx(s)); }
TheoremVerdict check_P3_4(const NumericalSemigroup& s) { return p3_4(make_ctx(s)); }
TheoremVerdict check_P3_5(const NumericalSemigroup& s) { return p3_5(make_ctx(s)); }
TheoremVerdict check_P3_6(const NumericalSemigroup& s) { return p3_6(make_ctx(s)); }
TheoremVerdict check_T4_1(const NumericalSemigroup& s) { return t4_1(make_ctx(s)); }
TheoremVerdict check_T4_2(const NumericalSemigroup& s) { return t4_2(make_ctx(s)); }
TheoremVerdict check_T4_3(const NumericalSemigroup& s) { return t4_3(make_ctx(s)); }
TheoremVerdict check_C4_4(const NumericalSemigroup& s) { return c4_4(make_ctx(s)); }
TheoremVerdict check_D5_HD(const NumericalSemigroup& s) { return d5_hd(make_ctx(s)); }
TheoremVerdict check_P5_1(const NumericalSemigroup& s) { return p5_1(make_ctx(s)); }
TheoremVerdict check_C5_2(const NumericalSemigroup& s) { return c5_2(make_ctx(s)); }
TheoremVerdict check_C5_3(const NumericalSemigroup& s) { return c5_3(make_ctx(s)); }

std::vector<TheoremVerdict> check_all(const NumericalSemigroup& s, const InvariantReport& r) {
    const Ctx x = make_ctx(s, r);
    return {p3_3(x), p3_4(x), p3_5(x), p3_6(x), t4_1(x), t4_2(x),
            t4_3(x), c4_4(x), d5_hd(x), p5_1(x), c5_2(x), c5_3(x)};
}

std::vector<TheoremVerdict> check_all(const NumericalSemigroup& s) {
    if (s.is_trivial())
        throw Error(Error::Kind::TrivialSemigroup,
                    "theorem checks are undefined for the full monoid N");
    return check_all(s, report(s));
}

void FuzzParams::validate() const {
    if (max_multiplicity < 2) throw Error(Error::Kind::BadParams, "max_multiplicity must be >= 2");
    if (max_generators < 2) throw Error(Error::Kind::BadParams, "max_generators must be >= 2");
    if (count < 0) throw Error(Error::Kind::BadParams, "count must be >= 0");
    if (threshold_probability < 0.0 || threshold_probability > 1.0)
        throw Error(Error::Kind::BadParams, "threshold_probability must be in [0, 1]");
}

RandomSemigroupStream::RandomSemigroupStream(FuzzParams params)
    : params_(params), engine_(params.seed) {
    params_.validate();
}

std::uint64_t RandomSemigroupStream::next_u64() { return engine_(); }

// Bounded draws use plain modulo on the raw mt19937_64 output: the standard
// distributions are implementation-defined, and run-to-run reproducibility
// matters more here than the (negligible) modulo bias.
std::int64_t RandomSemigroupStream::uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(next_u64() % span);
}

bool RandomSemigroupStream::bernoulli(double p) {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 < p;
}

GeneratorSpec RandomSemigroupStream::next_spec() {
    GeneratorSpec spec;
    const std::int64_t m = uniform(2, params_.max_multiplicity);
    spec.generators.push_back(m);
    const std::int64_t extras = uniform(1, params_.max_generators - 1);
    for (std::int64_t i = 0; i < extras; ++i) spec.generators.push_back(uniform(m + 1, 4 * m));
    if (bernoulli(params_.threshold_probability)) spec.threshold = uniform(2 * m, 15 * m);

    std::int64_t g = 0;
    for (std::int64_t x : spec.generators) g = std::gcd(g, x);
    while (g != 1) {
        const std::int64_t x = uniform(m + 1, 6 * m);
        if (std::gcd(g, x) == 1) {
            spec.generators.push_back(x);
            g = 1;
        }
    }
    return spec;
}

NumericalSemigroup RandomSemigroupStream::next() {
    return NumericalSemigroup::build(next_spec());
}

}  // namespace nsg
