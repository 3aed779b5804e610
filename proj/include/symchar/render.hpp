#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "symchar/torelli.hpp"

namespace symchar {

// Partition text syntax is comma-separated parts, e.g. "2,2,1"; the empty
// string is the empty partition. Parts may arrive unsorted and are ordered.
Partition parse_partition(const std::string& text);
std::string partition_to_text(const Partition& p);

// Bracket display with exponent grouping: <0>, <1^3>, <2^2,1^2>.
std::string partition_to_angle(const Partition& p);
Partition parse_angle_partition(const std::string& text);

// "3 <2^2> + <1>" in canonical partition order; multiplicities as prefixes.
std::string sp_to_text(const SpDecomposition& dec);
SpDecomposition parse_sp_text(const std::string& text);

std::string table_object_name(TableObject object);

nlohmann::json sp_terms_json(const SpDecomposition& dec);
nlohmann::json table_entry_json(TableObject object, int degree, const SpDecomposition& dec,
                                int sym_cap, int t_cap);
nlohmann::json table_json(const CharacterTable& table, int first_degree);

// Scalar t-series as a plain coefficient array; throws on non-integers.
nlohmann::json scalar_series_json(const CharSeries& series);

// Schur-basis rendering for GL-character series (moduli output):
// per-t-degree lines "t^j: s(2,1) + 3 s(1)".
std::string schur_series_to_text(const CharSeries& series);
nlohmann::json schur_series_json(const CharSeries& series);

// Golden tables: a literal transcription of published decomposition tables,
// loaded from a JSON fixture, never regenerated by the engine.
using GoldenTable = std::map<int, SpDecomposition>;

struct GoldenFixture {
    GoldenTable a;        // degrees 1..4
    GoldenTable torelli;  // degrees 1..8
};

GoldenFixture load_golden_fixture(const std::string& path);

struct GoldenDiff {
    int degree;
    Partition partition;
    Rational expected;  // fixture value
    Rational actual;    // computed value
};

// Exact multiset comparison per degree over the fixture's degree range.
std::vector<GoldenDiff> golden_check(const GoldenTable& fixture, const CharacterTable& computed);

std::string default_tables_path();

}  // namespace symchar
