#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symchar/oracle.hpp"
#include "symchar/render.hpp"
#include "symchar/torelli.hpp"

namespace {

using namespace symchar;

struct CommonFlags {
    std::string format = "text";
    int threads = 0;
    std::string cache_dir;
    bool no_cache = false;

    RunOptions run_options() const {
        RunOptions opts;
        opts.threads = threads;
        opts.cache_dir = cache_dir;
        opts.use_cache = !no_cache && !cache_dir.empty();
        return opts;
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--threads", flags.threads, "Worker threads (0 = auto)")
        ->capture_default_str();
    const char* env = std::getenv("SYMCHAR_CACHE_DIR");
    if (env)
        flags.cache_dir = env;
    cmd->add_option("--cache-dir", flags.cache_dir,
                    "Disk cache directory (default $SYMCHAR_CACHE_DIR)");
    cmd->add_flag("--no-cache", flags.no_cache, "Disable the disk cache");
}

void print_table(const CharacterTable& table, int first_degree, const std::string& format) {
    if (format == "json") {
        std::cout << table_json(table, first_degree).dump(1) << "\n";
        return;
    }
    for (int n = first_degree; n <= table.max_degree(); ++n)
        std::cout << "n=" << n << ": " << sp_to_text(table.degree(n)) << "\n";
}

void print_scalar_series(const CharSeries& series, const std::string& format) {
    if (format == "json") {
        std::cout << scalar_series_json(series).dump() << "\n";
        return;
    }
    for (int j = 0; j <= series.t_cap(); ++j)
        std::cout << "t^" << j << ": " << epsilon(series.at(j)).get_str() << "\n";
}

int run_selftest(const RunOptions& opts) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << " " << name << "\n";
        if (!ok)
            ++failures;
    };

    // Conversions and plethysms against the independent oracle at random
    // specializations.
    std::vector<oracle::Specialization> specs;
    for (int r = 0; r < 8; ++r) {
        oracle::Specialization s;
        for (int i = 0; i < 8; ++i)
            s.values.push_back(Rational(2 * r + i + 1, r + i + 2));
        specs.push_back(s);
    }
    auto agree = [&](const SymFn& a, const SymFn& b) {
        for (const auto& s : specs)
            if (oracle::evaluate(a, s) != oracle::evaluate(b, s))
                return false;
        return true;
    };

    bool conv_ok = true;
    for (int n = 1; n <= 6 && conv_ok; ++n) {
        SymFn hn = h_generator(n, n);
        SymFn from_schur = schur(Partition::single(n), n);
        conv_ok = agree(hn, from_schur);
    }
    check("h_n equals s_(n) under evaluation", conv_ok);

    bool schur_ok = true;
    for (const auto& lambda : partitions_of(5)) {
        SymFn s = schur(lambda, 5);
        auto coeffs = to_schur_basis(s);
        schur_ok = schur_ok && coeffs.size() == 1 && coeffs.begin()->first == lambda &&
                   coeffs.begin()->second == 1;
    }
    check("to_schur_basis inverts schur at degree 5", schur_ok);

    check("plethysm h2 o h2 matches oracle",
          plethysm(h_generator(2, 4), h_generator(2, 4)) ==
              oracle::brute_plethysm(h_generator(2, 4), h_generator(2, 4), 4));
    check("plethysm e2 o e2 matches oracle",
          plethysm(e_generator(2, 4), e_generator(2, 4)) ==
              oracle::brute_plethysm(e_generator(2, 4), e_generator(2, 4), 4));

    check("exp/log roundtrip at caps (6,6)", [&] {
        CharSeries f(6, 6);
        f.add_at(1, h_generator(1, 6));
        f.add_at(2, SymFn::one(6) + h_generator(2, 6));
        return log_op(exp_op(f)) == f;
    }());

    check("method agreement exp_ch_v at caps (9,3)",
          exp_ch_v(9, 3, ExpMethod::Generic, opts) == exp_ch_v(9, 3, ExpMethod::Gamma, opts));

    check("sp Jacobi-Trudi agrees with heat kernel at degree <= 6", [&] {
        for (int n = 0; n <= 6; ++n)
            for (const auto& lambda : partitions_of(n))
                if (sp_schur(lambda, 6) != apply_heat(HeatKind::D, -1, schur(lambda, 6)))
                    return false;
        return true;
    }());

    std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}

int run_golden(const std::string& object, const std::string& tables_path,
               const RunOptions& opts, const std::string& format) {
    GoldenFixture fixture = load_golden_fixture(tables_path);
    int failures = 0;
    auto report = [&](const std::string& name, const GoldenTable& table,
                      const CharacterTable& computed) {
        auto diffs = golden_check(table, computed);
        if (format == "json") {
            nlohmann::json out;
            out["object"] = name;
            out["pass"] = diffs.empty();
            nlohmann::json jdiffs = nlohmann::json::array();
            for (const auto& d : diffs)
                jdiffs.push_back({{"degree", d.degree},
                                  {"partition", d.partition.parts()},
                                  {"expected", d.expected.get_str()},
                                  {"actual", d.actual.get_str()}});
            out["diffs"] = jdiffs;
            std::cout << out.dump(1) << "\n";
        } else {
            if (diffs.empty()) {
                std::cout << "PASS golden " << name << "\n";
            } else {
                std::cout << "FAIL golden " << name << "\n";
                for (const auto& d : diffs)
                    std::cout << "  degree " << d.degree << " " << partition_to_angle(d.partition)
                              << " expected " << d.expected.get_str() << " got "
                              << d.actual.get_str() << "\n";
            }
        }
        if (!diffs.empty())
            ++failures;
    };
    if (object == "a" || object == "all")
        report("A", fixture.a, char_A(4, opts));
    if (object == "torelli" || object == "all")
        report("torelli", fixture.torelli, char_torelli(8, opts));
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symplectic character tables for the Torelli Lie algebra and its "
                 "quadratic dual"};
    app.require_subcommand(1);

    CommonFlags flags;

    int max_degree = 4;
    int t_max = 8;
    std::string partition_text;
    std::string plus_partition_text;
    std::string moduli_kind = "M";
    std::string golden_object = "all";
    std::string tables_path;

    auto* cmd_a = app.add_subcommand("a", "Character table of the quadratic algebra");
    cmd_a->add_option("--max-degree", max_degree, "Highest degree")->capture_default_str();
    add_common(cmd_a, flags);

    auto* cmd_a1 = app.add_subcommand("a1", "Character table of the one-marked-point variant");
    cmd_a1->add_option("--max-degree", max_degree, "Highest degree")->capture_default_str();
    add_common(cmd_a1, flags);

    auto* cmd_tor = app.add_subcommand("torelli", "Character table of the Torelli Lie algebra");
    cmd_tor->add_option("--max-degree", max_degree, "Highest degree")->capture_default_str();
    add_common(cmd_tor, flags);

    auto* cmd_poi = app.add_subcommand("poincare", "Stable cohomology Poincare series for <P>");
    cmd_poi->add_option("--partition", partition_text, "Coefficient system, e.g. 1,1,1");
    cmd_poi->add_option("--t-max", t_max, "Series truncation")->capture_default_str();
    add_common(cmd_poi, flags);

    auto* cmd_gamma = app.add_subcommand("gamma-infinity", "Stable Poincare series of the "
                                                           "mapping class group");
    cmd_gamma->add_option("--t-max", t_max, "Series truncation")->capture_default_str();
    add_common(cmd_gamma, flags);

    auto* cmd_wedge = app.add_subcommand("wedge2", "Symplectic decomposition of an exterior "
                                                   "square");
    cmd_wedge->add_option("--partition", partition_text, "Summand, e.g. 1,1,1")->required();
    cmd_wedge->add_option("--plus-partition", plus_partition_text, "Optional second summand");
    add_common(cmd_wedge, flags);

    auto* cmd_moduli = app.add_subcommand("moduli", "Stable moduli-space character series");
    cmd_moduli->add_option("--kind", moduli_kind, "M (marked points) or C (universal curve)")
        ->check(CLI::IsMember({"M", "C"}))
        ->capture_default_str();
    cmd_moduli->add_option("--max-degree", max_degree, "Symmetric degree cap")
        ->capture_default_str();
    cmd_moduli->add_option("--t-max", t_max, "Series truncation")->capture_default_str();
    add_common(cmd_moduli, flags);

    auto* cmd_self = app.add_subcommand("selftest", "Run the built-in verification battery");
    add_common(cmd_self, flags);

    auto* cmd_gold = app.add_subcommand("golden", "Compare computed tables against the "
                                                  "published fixtures");
    cmd_gold->add_option("--object", golden_object, "a, torelli, or all")
        ->check(CLI::IsMember({"a", "torelli", "all"}))
        ->capture_default_str();
    cmd_gold->add_option("--tables", tables_path, "Fixture file (default $SYMCHAR_TABLES or "
                                                  "data/paper_tables.json)");
    add_common(cmd_gold, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        // Memory budget: the symmetric cap of a run is 3x the table degree.
        constexpr int kMaxTableDegree = 24;
        constexpr int kMaxTPower = 48;
        constexpr int kMaxPartitionWeight = 60;
        if ((cmd_a->parsed() || cmd_a1->parsed() || cmd_tor->parsed() ||
             cmd_moduli->parsed()) &&
            (max_degree < 0 || max_degree > kMaxTableDegree))
            throw ParseError("--max-degree must be between 0 and " +
                             std::to_string(kMaxTableDegree));
        if ((cmd_poi->parsed() || cmd_gamma->parsed() || cmd_moduli->parsed()) &&
            (t_max < 0 || t_max > kMaxTPower))
            throw ParseError("--t-max must be between 0 and " + std::to_string(kMaxTPower));
        if ((cmd_poi->parsed() || cmd_wedge->parsed()) &&
            parse_partition(partition_text).weight() > kMaxPartitionWeight)
            throw ParseError("--partition weight exceeds the budget of " +
                             std::to_string(kMaxPartitionWeight));
        RunOptions opts = flags.run_options();
        if (cmd_a->parsed()) {
            print_table(char_A(max_degree, opts), 0, flags.format);
        } else if (cmd_a1->parsed()) {
            print_table(char_A1(max_degree, opts), 0, flags.format);
        } else if (cmd_tor->parsed()) {
            print_table(char_torelli(max_degree, opts), 1, flags.format);
        } else if (cmd_poi->parsed()) {
            print_scalar_series(poincare_series(parse_partition(partition_text), t_max, opts),
                                flags.format);
        } else if (cmd_gamma->parsed()) {
            print_scalar_series(gamma_infinity(t_max), flags.format);
        } else if (cmd_wedge->parsed()) {
            SpDecomposition input;
            input.add(parse_partition(partition_text), 1);
            if (!plus_partition_text.empty())
                input.add(parse_partition(plus_partition_text), 1);
            SpDecomposition result = wedge2_sp(input);
            if (flags.format == "json") {
                nlohmann::json out;
                out["object"] = "wedge2";
                out["terms"] = sp_terms_json(result);
                std::cout << out.dump(1) << "\n";
            } else {
                std::cout << sp_to_text(result) << "\n";
            }
        } else if (cmd_moduli->parsed()) {
            CharSeries series = stable_moduli_series(
                moduli_kind == "M" ? ModuliKind::MarkedPoints : ModuliKind::UniversalCurve,
                max_degree, t_max, opts);
            if (flags.format == "json")
                std::cout << schur_series_json(series).dump(1) << "\n";
            else
                std::cout << schur_series_to_text(series);
        } else if (cmd_self->parsed()) {
            return run_selftest(opts);
        } else if (cmd_gold->parsed()) {
            if (tables_path.empty())
                tables_path = default_tables_path();
            return run_golden(golden_object, tables_path, opts, flags.format);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
