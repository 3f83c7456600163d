// Command-line front end: per-semigroup invariant reports, inequality-check
// runs, randomized verification, family sweeps, and the reference-table
// comparison.
//
// Exit codes: 0 success, 1 falsification found, 2 parse/spec error,
// 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsg/invariants.hpp"
#include "nsg/serialize.hpp"
#include "nsg/sweep.hpp"
#include "nsg/theorems.hpp"
#include "nsg/wilf_eliahou.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIo = 3;

std::string opt_str(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
}

std::string opt_str(const std::optional<bool>& v) {
    if (!v) return "-";
    return *v ? "yes" : "no";
}

std::string join(const std::vector<std::int64_t>& xs, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

void print_info_text(const nsg::NumericalSemigroup& s, const nsg::InvariantReport& r,
                     std::ostream& os) {
    os << "semigroup <" << join(r.generators) << ">";
    if (r.threshold) os << "_" << *r.threshold;
    os << "\n";
    os << "  m=" << r.m << " c=" << r.c << " f=" << r.f << " e=" << r.e << " (e_s="
       << opt_str(r.e_s) << " e_c=" << opt_str(r.e_c) << ")\n";
    os << "  delta=" << r.delta << " gaps=" << (r.c - r.delta) << " q=" << opt_str(r.q)
       << " nu=" << opt_str(r.nu) << " L=" << opt_str(r.l) << " rho=" << opt_str(r.rho) << "\n";
    os << "  concentration=" << r.concentration << " mu=" << r.mu
       << " eliahou=" << opt_str(r.eliahou) << "\n";
    os << "  W(e)=" << r.wilf_e << " W(e_s)=" << opt_str(r.wilf_es) << " W(mu)=" << r.wilf_mu
       << "\n";
    os << "  type=" << opt_str(r.type) << " symmetric=" << opt_str(r.symmetric)
       << " pseudo_symmetric=" << opt_str(r.pseudo_symmetric)
       << " highly_dense=" << opt_str(r.highly_dense) << "\n";
    os << "  min generators (" << r.e << "): " << join(r.min_generators, ' ') << "\n";
    if (s.is_trivial()) return;

    const nsg::PartitionProfile p = nsg::partition_profile(s);
    os << "  length-m blocks I_a = [a*m, (a+1)*m), members below c:\n";
    for (std::size_t a = 0; a < p.blocks_i.size(); ++a) {
        os << "    I_" << a << " [" << p.blocks_i[a].lo << "," << p.blocks_i[a].hi
           << ") : " << p.n_alpha[a] << "\n";
    }
    os << "  shifted blocks J_a = [a*m-nu, (a+1)*m-nu), members:\n";
    for (std::size_t a = 0; a < p.blocks_j.size(); ++a) {
        std::int64_t members = 0;
        for (std::int64_t x = p.blocks_j[a].lo; x < p.blocks_j[a].hi; ++x)
            members += s.contains(x) ? 1 : 0;
        os << "    J_" << a << " [" << p.blocks_j[a].lo << "," << p.blocks_j[a].hi
           << ") : " << members << "\n";
    }
}

int run_info(const std::string& spec_text, const std::string& format) {
    const nsg::GeneratorSpec spec = nsg::GeneratorSpec::parse(spec_text);
    const nsg::NumericalSemigroup s = nsg::NumericalSemigroup::build(spec);
    nsg::InvariantReport r = nsg::report(s);
    r.generators = spec.generators;
    r.threshold = spec.threshold;

    if (format == "json") {
        std::cout << nsg::to_json(r).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << nsg::csv_header() << "\n" << nsg::to_csv_row(r) << "\n";
    } else {
        print_info_text(s, r, std::cout);
    }
    return kExitOk;
}

int run_check(const std::string& spec_text, const std::string& format) {
    const nsg::NumericalSemigroup s = nsg::NumericalSemigroup::from_string(spec_text);
    const auto verdicts = nsg::check_all(s);

    bool falsified = false;
    if (format == "json") {
        nsg::Json arr = nsg::Json::array();
        for (const auto& v : verdicts) arr.push_back(nsg::to_json(v));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "theorem,hypotheses_met,conclusion_holds,witness\n";
        for (const auto& v : verdicts) {
            std::string w;
            for (const auto& [key, value] : v.witness) {
                if (!w.empty()) w += ' ';
                w += key + "=" + std::to_string(value);
            }
            std::cout << nsg::to_string(v.id) << ',' << (v.hypotheses_met ? "true" : "false")
                      << ',' << (v.conclusion_holds ? (*v.conclusion_holds ? "true" : "false") : "")
                      << ",\"" << w << "\"\n";
        }
    } else {
        for (const auto& v : verdicts) {
            std::ostringstream line;
            line << nsg::to_string(v.id) << "  hypotheses "
                 << (v.hypotheses_met ? "met    " : "not met");
            line << "  conclusion ";
            if (v.conclusion_holds)
                line << (*v.conclusion_holds ? "holds " : "FAILS ");
            else
                line << "-     ";
            line << " [";
            for (std::size_t i = 0; i < v.witness.size(); ++i) {
                if (i) line << ' ';
                line << v.witness[i].first << '=' << v.witness[i].second;
            }
            line << "]";
            std::cout << line.str() << "\n";
        }
    }
    for (const auto& v : verdicts) falsified = falsified || v.falsified();
    return falsified ? kExitFalsified : kExitOk;
}

int run_verify(std::uint64_t seed, std::int64_t count, std::int64_t max_multiplicity,
               std::int64_t max_generators, double threshold_probability,
               const std::string& format) {
    nsg::FuzzParams params;
    params.seed = seed;
    params.count = count;
    params.max_multiplicity = max_multiplicity;
    params.max_generators = max_generators;
    params.threshold_probability = threshold_probability;
    params.validate();

    nsg::RandomSemigroupStream stream(params);
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> tally;  // met, falsified
    std::int64_t falsifications = 0;
    std::vector<std::string> failures;

    for (std::int64_t i = 0; i < params.count; ++i) {
        const nsg::GeneratorSpec spec = stream.next_spec();
        const nsg::NumericalSemigroup s = nsg::NumericalSemigroup::build(spec);
        for (const auto& v : nsg::check_all(s)) {
            auto& [met, bad] = tally[std::string(nsg::to_string(v.id))];
            met += v.hypotheses_met ? 1 : 0;
            if (v.falsified()) {
                ++bad;
                ++falsifications;
                if (failures.size() < 20)
                    failures.push_back(std::string(nsg::to_string(v.id)) + " on " +
                                       spec.to_string());
            }
        }
    }

    if (format == "json") {
        nsg::Json j;
        j["seed"] = params.seed;
        j["count"] = params.count;
        j["max_multiplicity"] = params.max_multiplicity;
        j["falsifications"] = falsifications;
        nsg::Json per;
        for (const auto& [id, counts] : tally)
            per[id] = {{"hypotheses_met", counts.first}, {"falsified", counts.second}};
        j["per_check"] = per;
        j["failures"] = failures;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "checked " << params.count << " semigroups (seed " << params.seed
                  << ", m <= " << params.max_multiplicity << "): " << falsifications
                  << " falsifications\n";
        for (const auto& [id, counts] : tally)
            std::cout << "  " << id << ": hypotheses met " << counts.first << ", falsified "
                      << counts.second << "\n";
        for (const auto& f : failures) std::cout << "  FALSIFIED: " << f << "\n";
    }
    return falsifications > 0 ? kExitFalsified : kExitOk;
}

int run_sweep(const std::string& builtin, const std::string& config_path,
              const std::string& out_path, const std::string& format) {
    nsg::SweepSpec spec;
    if (!builtin.empty()) {
        if (builtin == "type1")
            spec = nsg::builtin_type1();
        else if (builtin == "type2")
            spec = nsg::builtin_type2();
        else
            throw nsg::Error(nsg::Error::Kind::SpecInvalid,
                             "unknown builtin sweep '" + builtin + "'");
    } else {
        std::ifstream in(config_path);
        if (!in)
            throw nsg::Error(nsg::Error::Kind::Io, "cannot open config '" + config_path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw nsg::Error(nsg::Error::Kind::SpecInvalid,
                             std::string("config is not valid JSON: ") + e.what());
        }
        spec = nsg::SweepSpec::from_json(j);
    }

    std::cerr << "sweep grid: " << spec.grid_size() << " points, predicate "
              << spec.predicate.to_string() << ", dedupe " << (spec.dedupe ? "on" : "off")
              << "\n";

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw nsg::Error(nsg::Error::Kind::Io, "cannot write '" + out_path + "'");
        os = &file;
    }

    const bool jsonl = format == "jsonl" || format == "json";
    if (!jsonl) *os << nsg::csv_header() << "\n";
    auto emit = [&](const nsg::SweepRow& row) {
        if (jsonl)
            *os << nsg::to_json(row.report).dump() << "\n";
        else
            *os << nsg::to_csv_row(row.report) << "\n";
    };

    if (spec.dedupe) {
        const nsg::SweepResult result = nsg::enumerate(spec);
        for (const auto& row : result.rows) emit(row);
        std::cerr << "hits: " << result.raw_hits << " raw, " << result.distinct_hits
                  << " distinct\n";
    } else {
        // without dedup the rows stream out in sorted order as the grid is
        // scanned, so arbitrarily large grids run in bounded memory
        const std::int64_t emitted = nsg::enumerate_streaming(spec, emit);
        std::cerr << "hits: " << emitted << "\n";
    }
    if (os->fail()) throw nsg::Error(nsg::Error::Kind::Io, "write failed");
    return kExitOk;
}

std::string default_fixtures_path() {
    if (const char* env = std::getenv("NSG_TABLE1_FIXTURES")) return env;
#ifdef NSG_TABLE1_JSON
    return NSG_TABLE1_JSON;
#else
    return "data/table1.json";
#endif
}

int run_table1(const std::string& fixtures_path, const std::string& format) {
    std::ifstream in(fixtures_path);
    if (!in)
        throw nsg::Error(nsg::Error::Kind::Io, "cannot open fixtures '" + fixtures_path + "'");
    nlohmann::json fixtures;
    try {
        in >> fixtures;
    } catch (const nlohmann::json::exception& e) {
        throw nsg::Error(nsg::Error::Kind::Parse,
                         std::string("fixtures are not valid JSON: ") + e.what());
    }

    const std::vector<std::string> columns = fixtures.at("columns");
    nsg::Json out = nsg::Json::array();
    for (const auto& row : fixtures.at("rows")) {
        const std::string spec_text = row.at("spec");
        const nsg::InvariantReport r = nsg::report(nsg::GeneratorSpec::parse(spec_text));
        std::map<std::string, std::int64_t> computed = {
            {"eliahou", r.eliahou.value_or(0)}, {"concentration", r.concentration},
            {"e", r.e},                         {"mu", r.mu},
            {"wilf_e", r.wilf_e},               {"wilf_mu", r.wilf_mu},
        };
        nsg::Json cells = nsg::Json::array();
        for (const std::string& col : columns) {
            const std::int64_t published = row.at(col).get<std::int64_t>();
            cells.push_back({{"column", col},
                             {"published", published},
                             {"computed", computed.at(col)},
                             {"match", published == computed.at(col)}});
        }
        out.push_back({{"spec", spec_text}, {"cells", cells}});
    }

    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    for (const auto& row : out) {
        std::cout << "<" << row.at("spec").get<std::string>() << ">\n";
        std::cout << "  column         published   computed   match\n";
        bool all = true;
        for (const auto& cell : row.at("cells")) {
            const bool match = cell.at("match").get<bool>();
            all = all && match;
            std::ostringstream line;
            line << "  " << cell.at("column").get<std::string>();
            line << std::string(15 - std::min<std::size_t>(14, cell.at("column").get<std::string>().size()), ' ');
            std::string pub = std::to_string(cell.at("published").get<std::int64_t>());
            std::string cmp = std::to_string(cell.at("computed").get<std::int64_t>());
            line << pub << std::string(12 - std::min<std::size_t>(11, pub.size()), ' ');
            line << cmp << std::string(11 - std::min<std::size_t>(10, cmp.size()), ' ');
            line << (match ? "yes" : "NO");
            std::cout << line.str() << "\n";
        }
        std::cout << (all ? "  (all cells match)" : "  (MISMATCHES above)") << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroup invariants, checks and sweeps"};
    app.require_subcommand(1);

    std::string spec_text;
    std::string info_format = "text", check_format = "text", verify_format = "text";
    std::string sweep_format = "csv", table1_format = "text";
    std::string builtin, config_path, out_path, fixtures = default_fixtures_path();
    std::uint64_t seed = 42;
    std::int64_t count = 1000, max_multiplicity = 50, max_generators = 8;
    double threshold_probability = 0.5;

    auto* info = app.add_subcommand("info", "print the invariant report of a semigroup");
    info->add_option("spec", spec_text, "semigroup spec 'g1,g2,...[;r]'")->required();
    info->add_option("--format", info_format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* check = app.add_subcommand("check", "run every inequality check on a semigroup");
    check->add_option("spec", spec_text, "semigroup spec 'g1,g2,...[;r]'")->required();
    check->add_option("--format", check_format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* verify = app.add_subcommand("verify", "fuzz random semigroups through all checks");
    verify->add_option("--seed", seed);
    verify->add_option("--count", count);
    verify->add_option("--max-multiplicity", max_multiplicity);
    verify->add_option("--max-generators", max_generators);
    verify->add_option("--threshold-probability", threshold_probability);
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

    auto* sweep = app.add_subcommand("sweep", "enumerate a family grid");
    auto* builtin_opt = sweep->add_option("--builtin", builtin, "type1 or type2");
    sweep->add_option("--config", config_path, "sweep config JSON path")->excludes(builtin_opt);
    sweep->add_option("--out", out_path, "output file (default stdout)");
    sweep->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "jsonl", "json"}));

    auto* table1 = app.add_subcommand("table1", "rebuild the reference rows and compare");
    table1->add_option("--fixtures", fixtures, "fixtures JSON path");
    table1->add_option("--format", table1_format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*info) return run_info(spec_text, info_format);
        if (*check) return run_check(spec_text, check_format);
        if (*verify)
            return run_verify(seed, count, max_multiplicity, max_generators,
                              threshold_probability, verify_format);
        if (*sweep) {
            if (builtin.empty() && config_path.empty())
                throw nsg::Error(nsg::Error::Kind::SpecInvalid,
                                 "sweep needs --builtin or --config");
            return run_sweep(builtin, config_path, out_path, sweep_format);
        }
        if (*table1) return run_table1(fixtures, table1_format);
    } catch (const nsg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == nsg::Error::Kind::Io ? kExitIo : kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
