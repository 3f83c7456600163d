#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsg/serialize.hpp"
#include "nsg/theorems.hpp"
#include "nsg/wilf_eliahou.hpp"

using namespace nsg;

namespace {

NumericalSemigroup S(const char* text) { return NumericalSemigroup::from_string(text); }

const char* kDense13 = "50,55,60,65,70,73,77,81,86,91,96,194,199";

std::int64_t witness(const TheoremVerdict& v, const std::string& key) {
    for (const auto& [k, value] : v.witness)
        if (k == key) return value;
    FAIL(("missing witness " + key));
    return 0;
}

}  // namespace

TEST_CASE("delta lower bound (P3_3)") {
    // tight on the w_mq family
    for (std::int64_t m = 2; m <= 10; ++m) {
        for (std::int64_t q = 1; q <= 5; ++q) {
            const TheoremVerdict v = check_P3_3(w_mq(m, q));
            CHECK(v.hypotheses_met);
            CHECK(v.conclusion_holds == true);
            const std::int64_t k = witness(v, "k");
            const std::int64_t l = witness(v, "L");
            CHECK(k * (witness(v, "delta") - 1) == (l - 1) * m + witness(v, "rho"));
        }
    }
    CHECK(check_P3_3(S("30,42,51;290")).conclusion_holds == true);

    // {0, m, ->}: L=0, rho=m, k=1, bound collapses to delta >= 1
    const TheoremVerdict t = check_P3_3(S(";5"));
    CHECK(t.conclusion_holds == true);
    CHECK(witness(t, "delta") == 1);
}

TEST_CASE("small-generator lower bound needs c > 2m (P3_4)") {
    const TheoremVerdict v = check_P3_4(S(kDense13));
    CHECK(v.hypotheses_met);  // c=190 > 100
    CHECK(v.conclusion_holds == true);
    CHECK(witness(v, "e_s") * witness(v, "k") >= witness(v, "m"));

    const TheoremVerdict t = check_P3_4(S(";5"));  // c = m
    CHECK_FALSE(t.hypotheses_met);
    CHECK_FALSE(t.conclusion_holds.has_value());
}

TEST_CASE("wilf at twice the concentration (P3_5)") {
    const TheoremVerdict v = check_P3_5(S(kDense13));
    CHECK(v.hypotheses_met);
    CHECK(v.conclusion_holds == true);
    CHECK(witness(v, "wilf_2k") == 470);  // 10*66 - 190

    // the guard: {0,3,->} has W(2) = -1, so c > 2m is a real hypothesis
    const TheoremVerdict g = check_P3_5(S(";3"));
    CHECK_FALSE(g.hypotheses_met);
    CHECK(witness(g, "wilf_2k") == -1);
}

TEST_CASE("wilf at k+1 under a large delta (P3_6)") {
    const TheoremVerdict v = check_P3_6(S(kDense13));
    CHECK(v.hypotheses_met);  // 66 >= 50 - 5
    CHECK(v.conclusion_holds == true);
    CHECK(witness(v, "wilf_k_plus_1") == 206);

    const TheoremVerdict t = check_P3_6(S("2,3"));  // delta=1 >= 2-1
    CHECK(t.hypotheses_met);
    CHECK(t.conclusion_holds == true);
    CHECK(witness(t, "wilf_k_plus_1") == 0);
}

TEST_CASE("sandwich between the wilf values (T4_1)") {
    const TheoremVerdict ex3 = check_T4_1(S("30,42,51;290"));
    CHECK(ex3.conclusion_holds == true);
    CHECK(witness(ex3, "wilf_e") == 1205);
    CHECK(witness(ex3, "eliahou") == 105);
    CHECK(witness(ex3, "wilf_es") == -95);

    const TheoremVerdict r1 = check_T4_1(S("100,170,171,176;599"));
    CHECK(r1.conclusion_holds == true);
    CHECK(witness(r1, "wilf_e") == 2880);
    CHECK(witness(r1, "eliahou") == -1);
    CHECK(witness(r1, "wilf_es") == -403);

    const TheoremVerdict t = check_T4_1(S(";5"));
    CHECK(t.conclusion_holds == true);
    CHECK(witness(t, "wilf_e") == 0);
    CHECK(witness(t, "eliahou") == 0);
    CHECK(witness(t, "wilf_es") == -5);
}

TEST_CASE("necessary conditions under a negative eliahou number (T4_2)") {
    const TheoremVerdict v = check_T4_2(S("100,170,171,176;599"));
    CHECK(v.hypotheses_met);
    CHECK(v.conclusion_holds == true);
    CHECK(witness(v, "mu") == 13);
    CHECK(witness(v, "e_s") == 4);
    CHECK(witness(v, "e_c") * witness(v, "delta") == 67 * 49);

    CHECK_FALSE(check_T4_2(S("30,42,51;290")).hypotheses_met);  // E = 105
}

TEST_CASE("sufficient condition for a nonnegative eliahou number (T4_3)") {
    // m=50, k=5, L=3: 50*2 = 100 is not strictly above 25*4 = 100, so the
    // hypotheses fail even though E = 544 >= 0; sufficient, not necessary.
    const TheoremVerdict d = check_T4_3(S(kDense13));
    CHECK_FALSE(d.hypotheses_met);
    CHECK(witness(d, "m_times_L_minus_1") == 100);
    CHECK(witness(d, "k2_times_L_plus_1") == 100);
    CHECK(witness(d, "eliahou") == 544);

    // every negative-eliahou reference row must fail the hypotheses
    for (const char* spec : {"100,170,171,176;599", "100,270,272,275;998",
                             "100,270,273,275;1000", "100,170,173,174;597",
                             "100,170,172,175;598", "100,170,173,175;599",
                             "100,170,172,175;600"}) {
        CAPTURE(spec);
        CHECK_FALSE(check_T4_3(S(spec)).hypotheses_met);
    }
}

TEST_CASE("ratio bound when the eliahou number is negative (C4_4)") {
    const TheoremVerdict v = check_C4_4(S("100,170,171,176;599"));
    CHECK(v.hypotheses_met);
    CHECK(v.conclusion_holds == true);
    CHECK(witness(v, "m_times_L_minus_1") == 400);    // L = 5
    CHECK(witness(v, "k2_times_L_plus_1") == 29400);  // 70^2 * 6

    CHECK_FALSE(check_C4_4(S("30,42,51;290")).hypotheses_met);
}

TEST_CASE("highly dense membership (D5_HD)") {
    const TheoremVerdict v = check_D5_HD(S(kDense13));  // C=5, e=13
    CHECK(v.hypotheses_met);
    CHECK(witness(v, "clause_half_embedding") == 1);

    CHECK(check_D5_HD(S("2,3")).hypotheses_met);       // C=1
    CHECK(check_D5_HD(S(";9")).hypotheses_met);        // C=1
    CHECK_FALSE(check_D5_HD(S("5,7")).hypotheses_met); // C=3, e=2
    CHECK_FALSE(check_D5_HD(w_mq(8, 4)).hypotheses_met);
}

TEST_CASE("wilf nonnegativity for highly dense semigroups (P5_1)") {
    const TheoremVerdict v = check_P5_1(S(kDense13));
    CHECK(v.hypotheses_met);
    CHECK(v.conclusion_holds == true);
    CHECK(witness(v, "wilf_e") == 668);  // 13*66 - 190

    // highly dense but c = m: the inherited c > 2m guard keeps this out
    CHECK_FALSE(check_P5_1(S(";3")).hypotheses_met);
}

TEST_CASE("nonnegative eliahou for highly dense semigroups (C5_2, C5_3)") {
    const TheoremVerdict a = check_C5_2(S(kDense13));  // e_s=11 >= 2*5
    CHECK(a.hypotheses_met);
    CHECK(a.conclusion_holds == true);
    CHECK(witness(a, "eliahou") == 544);

    const TheoremVerdict b = check_C5_3(S(kDense13));  // e_s >= 6, delta >= 45
    CHECK(b.hypotheses_met);
    CHECK(b.conclusion_holds == true);

    CHECK_FALSE(check_C5_2(S("2,3")).hypotheses_met);  // k = 1
}

TEST_CASE("check_all yields one verdict per id with no falsification") {
    const auto verdicts = check_all(S("30,42,51;290"));
    REQUIRE(verdicts.size() == 12);
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        CHECK(verdicts[i].id == static_cast<TheoremId>(i));
        CHECK_FALSE(verdicts[i].falsified());
    }
    CHECK_THROWS_AS((void)check_all(S("1")), Error);
}

TEST_CASE("verdicts serialize to json with ids, flags and witness") {
    const Json j = to_json(check_P3_4(S(";5")));
    CHECK(j["theorem"] == "P3_4");
    CHECK(j["hypotheses_met"] == false);
    CHECK(j["conclusion_holds"].is_null());
    CHECK(j["witness"]["m"] == 5);
}

TEST_CASE("random stream is deterministic per seed") {
    FuzzParams params;
    params.seed = 1234;
    params.count = 25;
    RandomSemigroupStream a(params), b(params);
    for (int i = 0; i < 25; ++i) {
        const GeneratorSpec sa = a.next_spec();
        const GeneratorSpec sb = b.next_spec();
        CHECK(sa.generators == sb.generators);
        CHECK(sa.threshold == sb.threshold);
    }

    params.seed = 1235;
    RandomSemigroupStream c(params);
    bool differs = false;
    RandomSemigroupStream a2(FuzzParams{.seed = 1234});
    for (int i = 0; i < 25; ++i)
        differs = differs || c.next_spec().generators != a2.next_spec().generators;
    CHECK(differs);
}

TEST_CASE("random stream respects the multiplicity cap") {
    FuzzParams params;
    params.seed = 99;
    params.max_multiplicity = 2;
    RandomSemigroupStream stream(params);
    for (int i = 0; i < 40; ++i) {
        const NumericalSemigroup s = stream.next();
        CHECK(s.multiplicity() == 2);
        REQUIRE(s.min_generators().size() == 2);
        CHECK(s.min_generators()[1] % 2 == 1);  // <2, odd>
    }
}

TEST_CASE("random stream emits structurally valid semigroups") {
    FuzzParams params;
    params.seed = 31337;
    params.max_multiplicity = 80;
    RandomSemigroupStream stream(params);
    for (int i = 0; i < 200; ++i) {
        const GeneratorSpec spec = stream.next_spec();
        std::int64_t g = 0;
        for (std::int64_t x : spec.generators) g = std::gcd(g, x);
        CHECK(g == 1);  // coprime even when a threshold is present
        const NumericalSemigroup s = NumericalSemigroup::build(spec);
        CHECK_FALSE(s.is_trivial());
        CHECK(s.multiplicity() >= 2);
        CHECK(s.multiplicity() <= params.max_multiplicity);
        if (spec.threshold) {
            CHECK(*spec.threshold >= 2 * s.multiplicity());
            CHECK(*spec.threshold <= 15 * s.multiplicity());
        }
    }
}

TEST_CASE("random stream rejects bad parameters") {
    FuzzParams params;
    params.max_multiplicity = 1;
    CHECK_THROWS_AS(RandomSemigroupStream{params}, Error);
    params = FuzzParams{};
    params.threshold_probability = 1.5;
    CHECK_THROWS_AS(RandomSemigroupStream{params}, Error);
}

TEST_CASE("fuzz corpus produces no falsification") {
    FuzzParams params;
    params.seed = 20240601;
    params.count = 2000;
    params.max_multiplicity = 60;
    RandomSemigroupStream stream(params);
    std::int64_t hyp_met[12] = {0};
    for (int i = 0; i < params.count; ++i) {
        const NumericalSemigroup s = stream.next();
        const auto verdicts = check_all(s);
        for (std::size_t t = 0; t < verdicts.size(); ++t) {
            CAPTURE(s.min_generators());
            REQUIRE_FALSE(verdicts[t].falsified());
            hyp_met[t] += verdicts[t].hypotheses_met ? 1 : 0;
        }
    }
    // the unconditional checks fire everywhere; the conditional ones at
    // least somewhere, so every conclusion actually gets exercised
    CHECK(hyp_met[0] == params.count);  // P3_3
    CHECK(hyp_met[4] == params.count);  // T4_1
    for (int t : {1, 2, 3, 8, 9}) CHECK(hyp_met[t] > 0);
}

TEST_CASE("no semigroup satisfies both the negative-E and ratio hypotheses") {
    FuzzParams params;
    params.seed = 777;
    params.count = 800;
    params.max_multiplicity = 50;
    RandomSemigroupStream stream(params);
    for (int i = 0; i < params.count; ++i) {
        const NumericalSemigroup s = stream.next();
        const TheoremVerdict pos = check_T4_3(s);
        const TheoremVerdict neg = check_C4_4(s);
        CHECK_FALSE((pos.hypotheses_met && neg.hypotheses_met));
    }
}
