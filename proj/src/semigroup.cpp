#include "nsg/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace nsg {
namespace {

// Hard caps: on input magnitude (keeps every derived bound inside int64)
// and on dense sieve size. Inputs at the intended scale stay far below.
constexpr std::int64_t kMaxInput = std::int64_t{1} << 30;
constexpr std::int64_t kMaxSieveCells = std::int64_t{1} << 30;

// Marks, within [0, n), the additive closure of {0} union gens union
// (tail ? [*tail, n) : {}).
std::vector<bool> sieve_closure(const std::vector<std::int64_t>& gens,
                                std::optional<std::int64_t> tail, std::int64_t n) {
    if (n > kMaxSieveCells)
        throw Error(Error::Kind::BadParams,
                    "generators/threshold too large for the dense sieve");
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    in[0] = true;
    if (tail) {
        for (std::int64_t x = std::max<std::int64_t>(*tail, 0); x < n; ++x)
            in[static_cast<std::size_t>(x)] = true;
    }
    for (std::int64_t g : gens) {
        if (g >= n) continue;
        for (std::int64_t i = g; i < n; ++i) {
            if (in[static_cast<std::size_t>(i - g)]) in[static_cast<std::size_t>(i)] = true;
        }
    }
    return in;
}

// Largest unmarked index + 1, or 0 if everything is marked.
std::int64_t conductor_of(const std::vector<bool>& in) {
    for (std::int64_t i = static_cast<std::int64_t>(in.size()) - 1; i >= 0; --i) {
        if (!in[static_cast<std::size_t>(i)]) return i + 1;
    }
    return 0;
}

// First index t such that [t, t+m) is fully marked, or -1.
std::int64_t find_full_run(const std::vector<bool>& in, std::int64_t m) {
    std::int64_t run = 0;
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(in.size()); ++i) {
        run = in[static_cast<std::size_t>(i)] ? run + 1 : 0;
        if (run >= m) return i - m + 1;
    }
    return -1;
}

std::int64_t parse_int(std::string_view tok) {
    std::int64_t value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw Error(Error::Kind::Parse, "not an integer: '" + std::string(tok) + "'");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

void GeneratorSpec::validate() const {
    if (generators.empty() && !threshold)
        throw Error(Error::Kind::EmptySpec, "no generators and no threshold");
    for (std::int64_t g : generators) {
        if (g == 0) throw Error(Error::Kind::ZeroGenerator, "generator 0 is not allowed");
        if (g < 0) throw Error(Error::Kind::BadParams, "negative generator");
        if (g > kMaxInput) throw Error(Error::Kind::BadParams, "generator too large");
    }
    if (threshold && (*threshold <= 0 || *threshold > kMaxInput))
        throw Error(Error::Kind::BadParams, "threshold must be positive and of sane size");
    if (!threshold) {
        std::int64_t g = 0;
        for (std::int64_t x : generators) g = std::gcd(g, x);
        if (g != 1)
            throw Error(Error::Kind::NonCoprime,
                        "gcd(generators) = " + std::to_string(g) +
                            " > 1; the complement would be infinite");
    }
}

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
    GeneratorSpec spec;
    text = trim(text);
    std::string_view gens_part = text;
    if (auto semi = text.find(';'); semi != std::string_view::npos) {
        gens_part = trim(text.substr(0, semi));
        std::string_view thr = trim(text.substr(semi + 1));
        if (thr.empty()) throw Error(Error::Kind::Parse, "empty threshold after ';'");
        spec.threshold = parse_int(thr);
    }
    if (!gens_part.empty()) {
        std::size_t pos = 0;
        while (pos <= gens_part.size()) {
            std::size_t comma = gens_part.find(',', pos);
            std::string_view tok =
                trim(gens_part.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
            if (tok.empty()) throw Error(Error::Kind::Parse, "empty generator token");
            spec.generators.push_back(parse_int(tok));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    spec.validate();
    return spec;
}

std::string GeneratorSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(generators[i]);
    }
    if (threshold) {
        out += ';';
        out += std::to_string(*threshold);
    }
    return out;
}

NumericalSemigroup NumericalSemigroup::build(const GeneratorSpec& spec) {
    spec.validate();

    std::vector<std::int64_t> gens = spec.generators;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::int64_t m = gens.empty() ? *spec.threshold : gens.front();
    if (spec.threshold) m = std::min(m, *spec.threshold);

    std::vector<bool> in;
    std::int64_t c = 0;
    if (m == 1) {
        // 1 is an element, so the semigroup is all of N.
        in.assign(1, true);
    } else if (spec.threshold) {
        // Everything from the threshold on is present; gaps live below it.
        const std::int64_t n = *spec.threshold + m + 1;
        in = sieve_closure(gens, spec.threshold, n);
        c = conductor_of(in);
    } else {
        // Grow the sieve until m consecutive members show up; from there on
        // every integer is a member (add multiples of m).
        std::int64_t n = std::max<std::int64_t>(4 * gens.back(), 2 * m + 2);
        // gcd = 1 bounds the largest gap by m*max(gens), so this terminates.
        const std::int64_t limit = 4 * m * gens.back() + 4 * m;
        for (;;) {
            in = sieve_closure(gens, std::nullopt, n);
            std::int64_t t = find_full_run(in, m);
            if (t >= 0) {
                c = conductor_of(in);
                break;
            }
            if (n > limit)
                throw Error(Error::Kind::BadParams, "sieve failed to close; bad generator set");
            n *= 2;
        }
    }

    NumericalSemigroup s;
    s.c_ = c;
    s.m_ = m;
    s.member_.assign(in.begin(), in.begin() + static_cast<std::size_t>(c + m));

    if (m == 1) {
        s.min_gens_ = {1};
        return s;
    }

    // Minimal generators: scan upward; x is minimal iff it is not a sum of
    // previously found generators. reach[] tracks sums of found generators.
    std::vector<bool> reach(static_cast<std::size_t>(c + m), false);
    reach[0] = true;
    for (std::int64_t x = m; x < c + m; ++x) {
        if (!s.member_[static_cast<std::size_t>(x)]) continue;
        if (reach[static_cast<std::size_t>(x)]) continue;
        s.min_gens_.push_back(x);
        for (std::int64_t i = x; i < c + m; ++i) {
            if (reach[static_cast<std::size_t>(i - x)]) reach[static_cast<std::size_t>(i)] = true;
        }
    }
    return s;
}

NumericalSemigroup NumericalSemigroup::from_string(std::string_view text) {
    return build(GeneratorSpec::parse(text));
}

bool NumericalSemigroup::contains(std::int64_t x) const {
    if (x < 0) return false;
    if (x >= c_) return true;
    return member_[static_cast<std::size_t>(x)];
}

std::int64_t NumericalSemigroup::next_element(std::int64_t s) const {
    if (s < 0) return 0;
    for (std::int64_t x = s + 1; x < c_; ++x) {
        if (member_[static_cast<std::size_t>(x)]) return x;
    }
    return std::max(s + 1, c_);
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 1; x < c_; ++x) {
        if (!member_[static_cast<std::size_t>(x)]) out.push_back(x);
    }
    return out;
}

std::vector<std::int64_t> NumericalSemigroup::small_elements() const {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x < c_; ++x) {
        if (member_[static_cast<std::size_t>(x)]) out.push_back(x);
    }
    return out;
}

std::int64_t NumericalSemigroup::small_count() const {
    std::int64_t n = 0;
    for (std::int64_t x = 0; x < c_; ++x) n += member_[static_cast<std::size_t>(x)] ? 1 : 0;
    return n;
}

std::uint64_t NumericalSemigroup::digest() const {
    // FNV-1a over the conductor and the small elements.
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(c_));
    for (std::int64_t x = 0; x < c_; ++x) {
        if (member_[static_cast<std::size_t>(x)]) mix(static_cast<std::uint64_t>(x));
    }
    return h;
}

bool equals(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    if (a.conductor() != b.conductor()) return false;
    for (std::int64_t x = 0; x < a.conductor(); ++x) {
        if (a.contains(x) != b.contains(x)) return false;
    }
    return true;
}

}  // namespace nsg
