#include "nsg/sweep.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <thread>
#include <unordered_map>

namespace nsg {
namespace {

constexpr std::int64_t kMaxGridSize = 100'000'000;

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("NSG_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

struct Hit {
    SweepRow row;
    std::uint64_t digest = 0;
    std::int64_t c = 0;
    std::int64_t delta = 0;
};

// Grid point at flat index: threshold-major, then slot values in
// lexicographic order (first slot most significant).
GeneratorSpec point_at(const SweepSpec& spec, std::int64_t index) {
    std::int64_t slots_total = 1;
    for (const IntRange& r : spec.variable_slots) slots_total *= r.size();

    const std::int64_t t_idx = index / slots_total;
    std::int64_t rest = index % slots_total;

    GeneratorSpec g;
    g.generators = spec.fixed_generators;
    std::vector<std::int64_t> values(spec.variable_slots.size());
    for (std::size_t i = spec.variable_slots.size(); i-- > 0;) {
        const IntRange& r = spec.variable_slots[i];
        values[i] = r.lo + rest % r.size();
        rest /= r.size();
    }
    for (std::int64_t v : values) g.generators.push_back(v);
    g.threshold = spec.threshold_range.lo + t_idx;
    return g;
}

bool point_less(const SweepRow& a, const SweepRow& b) {
    // Lexicographic on (generator tuple, threshold); used to pick the
    // representative of a dedup group.
    if (a.point_generators != b.point_generators) return a.point_generators < b.point_generators;
    return a.threshold < b.threshold;
}

bool output_less(const SweepRow& a, const SweepRow& b) {
    if (a.threshold != b.threshold) return a.threshold < b.threshold;
    return a.point_generators < b.point_generators;
}

}  // namespace

bool Predicate::matches(const InvariantReport& r) const {
    switch (kind) {
        case PredicateKind::EliahouNegative: return r.eliahou && *r.eliahou < 0;
        case PredicateKind::EliahouIn: return r.eliahou && lo <= *r.eliahou && *r.eliahou <= hi;
        case PredicateKind::HighlyDense: return r.highly_dense && *r.highly_dense;
        case PredicateKind::All: return true;
    }
    return false;
}

Predicate Predicate::parse(const std::string& text) {
    Predicate p;
    if (text == "eliahou_negative") {
        p.kind = PredicateKind::EliahouNegative;
    } else if (text == "highly_dense") {
        p.kind = PredicateKind::HighlyDense;
    } else if (text == "all") {
        p.kind = PredicateKind::All;
    } else if (text.rfind("eliahou_in(", 0) == 0 && text.back() == ')') {
        const std::string inner = text.substr(11, text.size() - 12);
        const std::size_t comma = inner.find(',');
        if (comma == std::string::npos)
            throw Error(Error::Kind::SpecInvalid, "expected eliahou_in(lo,hi)");
        try {
            p.lo = std::stoll(inner.substr(0, comma));
            p.hi = std::stoll(inner.substr(comma + 1));
        } catch (const std::exception&) {
            throw Error(Error::Kind::SpecInvalid, "bad bounds in eliahou_in(lo,hi)");
        }
        if (p.lo > p.hi) throw Error(Error::Kind::SpecInvalid, "eliahou_in bounds out of order");
        p.kind = PredicateKind::EliahouIn;
    } else {
        throw Error(Error::Kind::SpecInvalid, "unknown predicate '" + text + "'");
    }
    return p;
}

std::string Predicate::to_string() const {
    switch (kind) {
        case PredicateKind::EliahouNegative: return "eliahou_negative";
        case PredicateKind::EliahouIn:
            return "eliahou_in(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
        case PredicateKind::HighlyDense: return "highly_dense";
        case PredicateKind::All: return "all";
    }
    return "all";
}

void SweepSpec::validate() const {
    for (std::int64_t g : fixed_generators) {
        if (g < 1) throw Error(Error::Kind::SpecInvalid, "fixed generators must be positive");
    }
    for (const IntRange& r : variable_slots) {
        if (r.lo > r.hi) throw Error(Error::Kind::SpecInvalid, "slot range is empty");
        if (r.lo < 1) throw Error(Error::Kind::SpecInvalid, "slot values must be positive");
    }
    if (threshold_range.lo > threshold_range.hi)
        throw Error(Error::Kind::SpecInvalid, "threshold range is empty");
    if (threshold_range.lo < 1)
        throw Error(Error::Kind::SpecInvalid, "thresholds must be positive");
    if (grid_size() > kMaxGridSize)
        throw Error(Error::Kind::SpecInvalid, "grid is too large");
}

std::int64_t SweepSpec::grid_size() const {
    std::int64_t total = threshold_range.size();
    for (const IntRange& r : variable_slots) {
        if (total > kMaxGridSize / r.size()) return kMaxGridSize + 1;
        total *= r.size();
    }
    return total;
}

SweepSpec SweepSpec::from_json(const nlohmann::json& j) {
    SweepSpec spec;
    try {
        if (!j.is_object()) throw Error(Error::Kind::SpecInvalid, "sweep config must be an object");
        if (!j.contains("fixed") || !j.contains("slots") || !j.contains("threshold") ||
            !j.contains("predicate"))
            throw Error(Error::Kind::SpecInvalid,
                        "sweep config needs fixed, slots, threshold, predicate");
        spec.fixed_generators = j.at("fixed").get<std::vector<std::int64_t>>();
        for (const auto& slot : j.at("slots")) {
            if (!slot.is_array() || slot.size() != 2)
                throw Error(Error::Kind::SpecInvalid, "each slot must be [lo, hi]");
            spec.variable_slots.push_back(
                {slot[0].get<std::int64_t>(), slot[1].get<std::int64_t>()});
        }
        const auto& thr = j.at("threshold");
        if (!thr.is_array() || thr.size() != 2)
            throw Error(Error::Kind::SpecInvalid, "threshold must be [lo, hi]");
        spec.threshold_range = {thr[0].get<std::int64_t>(), thr[1].get<std::int64_t>()};
        spec.predicate = Predicate::parse(j.at("predicate").get<std::string>());
        spec.dedupe = j.value("dedupe", true);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Error::Kind::SpecInvalid, std::string("bad sweep config: ") + e.what());
    }
    spec.validate();
    return spec;
}

nlohmann::ordered_json SweepSpec::to_json() const {
    nlohmann::ordered_json j;
    j["fixed"] = fixed_generators;
    auto slots = nlohmann::ordered_json::array();
    for (const IntRange& r : variable_slots) slots.push_back({r.lo, r.hi});
    j["slots"] = slots;
    j["threshold"] = {threshold_range.lo, threshold_range.hi};
    j["predicate"] = predicate.to_string();
    j["dedupe"] = dedupe;
    return j;
}

namespace {

// Points per streamed block: bounds memory while leaving enough work to
// split across threads.
constexpr std::int64_t kBlockSize = 4096;

// Evaluates grid points [begin, end) into per-index slots (hits only), in
// parallel; slot order keeps the result independent of the thread count.
void evaluate_block(const SweepSpec& spec, std::int64_t begin, std::int64_t end,
                    unsigned threads, std::vector<std::optional<Hit>>& out) {
    out.assign(static_cast<std::size_t>(end - begin), std::nullopt);
    auto work = [&spec, &out, begin](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t idx = lo; idx < hi; ++idx) {
            const GeneratorSpec point = point_at(spec, idx);
            const NumericalSemigroup s = NumericalSemigroup::build(point);
            InvariantReport r = report(s);
            r.generators = point.generators;
            r.threshold = point.threshold;
            if (!spec.predicate.matches(r)) continue;
            Hit hit;
            hit.row = SweepRow{point.generators, *point.threshold, std::move(r)};
            hit.digest = s.digest();
            hit.c = s.conductor();
            hit.delta = hit.row.report.delta;
            out[static_cast<std::size_t>(idx - begin)] = std::move(hit);
        }
    };

    const std::int64_t span = end - begin;
    const unsigned nthreads =
        static_cast<unsigned>(std::min<std::int64_t>(threads > 0 ? threads : 1, span));
    if (nthreads <= 1) {
        work(begin, end);
        return;
    }
    const std::int64_t chunk = (span + nthreads - 1) / nthreads;
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            try {
                work(std::min(begin + t * chunk, end),
                     std::min(begin + (t + 1) * chunk, end));
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

}  // namespace

std::int64_t enumerate_streaming(const SweepSpec& spec,
                                 const std::function<void(const SweepRow&)>& sink,
                                 unsigned threads) {
    spec.validate();
    const std::int64_t total = spec.grid_size();
    const unsigned nthreads = resolve_threads(threads);
    std::int64_t emitted = 0;
    std::vector<std::optional<Hit>> block;
    for (std::int64_t begin = 0; begin < total; begin += kBlockSize) {
        const std::int64_t end = std::min(begin + kBlockSize, total);
        evaluate_block(spec, begin, end, nthreads, block);
        for (auto& slot : block) {
            if (!slot) continue;
            sink(slot->row);
            ++emitted;
        }
    }
    return emitted;
}

SweepResult enumerate(const SweepSpec& spec, unsigned threads) {
    spec.validate();
    const std::int64_t total = spec.grid_size();
    const unsigned nthreads = resolve_threads(threads);

    // Dedup happens as the grid streams by: groups are keyed by the
    // canonical digest and only one representative per group (the
    // lexicographically smallest spec point) is retained.
    std::vector<Hit> kept;
    std::unordered_map<std::uint64_t, std::size_t> groups;
    std::int64_t raw_hits = 0;
    std::vector<std::optional<Hit>> block;
    for (std::int64_t begin = 0; begin < total; begin += kBlockSize) {
        const std::int64_t end = std::min(begin + kBlockSize, total);
        evaluate_block(spec, begin, end, nthreads, block);
        for (auto& slot : block) {
            if (!slot) continue;
            ++raw_hits;
            if (!spec.dedupe) {
                kept.push_back(std::move(*slot));
                continue;
            }
            auto [it, inserted] = groups.try_emplace(slot->digest, kept.size());
            if (inserted) {
                kept.push_back(std::move(*slot));
                continue;
            }
            Hit& have = kept[it->second];
            if (have.c != slot->c || have.delta != slot->delta)
                throw Error(Error::Kind::BadParams, "sweep digest collision; please report");
            if (point_less(slot->row, have.row)) have = std::move(*slot);
        }
    }

    SweepResult result;
    result.grid_size = total;
    result.raw_hits = raw_hits;
    result.distinct_hits = static_cast<std::int64_t>(kept.size());
    result.rows.reserve(kept.size());
    for (Hit& hit : kept) result.rows.push_back(std::move(hit.row));
    std::sort(result.rows.begin(), result.rows.end(), output_less);
    return result;
}

SweepSpec builtin_type1() {
    SweepSpec spec;
    spec.fixed_generators = {100, 170};
    spec.variable_slots = {{171, 180}, {171, 180}};
    spec.threshold_range = {593, 602};
    spec.predicate.kind = PredicateKind::EliahouNegative;
    spec.dedupe = true;
    return spec;
}

SweepSpec builtin_type2() {
    SweepSpec spec;
    spec.fixed_generators = {100, 270};
    spec.variable_slots = {{271, 280}, {271, 280}};
    spec.threshold_range = {993, 1005};
    spec.predicate.kind = PredicateKind::EliahouNegative;
    spec.dedupe = true;
    return spec;
}

std::vector<GeneratorSpec> builtin_table1() {
    const char* specs[] = {
        "100,170,171,176;599", "100,270,272,275;998", "100,270,271,175;999",
        "100,270,273,275;1000", "100,170,173,174;597", "100,170,172,175;598",
        "100,170,173,175;599", "100,170,172,175;600",
    };
    std::vector<GeneratorSpec> out;
    for (const char* s : specs) out.push_back(GeneratorSpec::parse(s));
    return out;
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::Type1: return "type1";
        case Family::Type2: return "type2";
        case Family::Other: return "other";
    }
    return "other";
}

Family classify_family(const SweepRow& row) {
    if (row.point_generators.size() != 4) return Family::Other;
    std::vector<std::int64_t> g = row.point_generators;
    std::sort(g.begin(), g.end());
    const InvariantReport& r = row.report;
    const bool split_ok = r.e_s && (*r.e_s == 3 || *r.e_s == 4);

    if (g[0] == 100 && g[1] == 170 && g[2] >= 171 && g[3] <= 176 && r.c >= 597 && r.c <= 600 &&
        split_ok && r.c > 5 * r.m)
        return Family::Type1;
    if (g[0] == 100 && g[1] == 270 && g[2] >= 271 && g[3] <= 276 && r.c >= 997 && r.c <= 1000 &&
        split_ok && r.c > 9 * r.m)
        return Family::Type2;
    return Family::Other;
}

}  // namespace nsg
