#include "symchar/render.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace symchar {

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        // trim blanks
        std::size_t a = token.find_first_not_of(" \t");
        std::size_t b = token.find_last_not_of(" \t");
        if (a == std::string::npos)
            continue;
        token = token.substr(a, b - a + 1);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw ParseError("invalid partition part '" + token + "'");
        }
        if (used != token.size() || value <= 0)
            throw ParseError("invalid partition part '" + token + "'");
        parts.push_back(value);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

std::string partition_to_text(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

std::string partition_to_angle(const Partition& p) {
    if (p.empty())
        return "<0>";
    std::string out = "<";
    const auto& parts = p.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (i)
            out += ',';
        out += std::to_string(parts[i]);
        if (j - i > 1)
            out += '^' + std::to_string(j - i);
        i = j;
    }
    return out + ">";
}

Partition parse_angle_partition(const std::string& text) {
    if (text.size() < 2 || text.front() != '<' || text.back() != '>')
        throw ParseError("expected <...> in '" + text + "'");
    std::string inner = text.substr(1, text.size() - 2);
    if (inner == "0")
        return Partition();
    std::vector<int> parts;
    std::istringstream in(inner);
    std::string token;
    while (std::getline(in, token, ',')) {
        int value = 0, mult = 1;
        std::size_t caret = token.find('^');
        try {
            if (caret == std::string::npos) {
                value = std::stoi(token);
            } else {
                value = std::stoi(token.substr(0, caret));
                mult = std::stoi(token.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw ParseError("invalid bracket partition '" + text + "'");
        }
        if (value <= 0 || mult <= 0)
            throw ParseError("invalid bracket partition '" + text + "'");
        for (int r = 0; r < mult; ++r)
            parts.push_back(value);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

std::string sp_to_text(const SpDecomposition& dec) {
    if (dec.empty())
        return "0";
    std::string out;
    for (const auto& [lambda, mult] : dec.terms()) {
        if (!out.empty())
            out += " + ";
        if (mult != 1)
            out += mult.get_str() + " ";
        out += partition_to_angle(lambda);
    }
    return out;
}

SpDecomposition parse_sp_text(const std::string& text) {
    SpDecomposition out;
    if (text == "0" || text.empty())
        return out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        // term boundary: " + "
        std::size_t next = text.find(" + ", pos);
        std::string term =
            next == std::string::npos ? text.substr(pos) : text.substr(pos, next - pos);
        pos = next == std::string::npos ? text.size() : next + 3;
        std::size_t bracket = term.find('<');
        if (bracket == std::string::npos)
            throw ParseError("missing <...> in term '" + term + "'");
        Rational mult = 1;
        std::string head = term.substr(0, bracket);
        while (!head.empty() && head.back() == ' ')
            head.pop_back();
        if (!head.empty()) {
            try {
                mult = Rational(head);
                mult.canonicalize();
            } catch (const std::exception&) {
                throw ParseError("invalid multiplicity '" + head + "'");
            }
        }
        out.add(parse_angle_partition(term.substr(bracket)), mult);
    }
    return out;
}

std::string table_object_name(TableObject object) {
    switch (object) {
        case TableObject::A:
            return "A";
        case TableObject::A1:
            return "A1";
        case TableObject::Torelli:
            return "torelli";
    }
    return "?";
}

namespace {

nlohmann::json rational_json(const Rational& q) {
    if (is_integer(q) && q.get_num().fits_slong_p())
        return q.get_num().get_si();
    return q.get_str();
}

}  // namespace

nlohmann::json sp_terms_json(const SpDecomposition& dec) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lambda, mult] : dec.terms())
        terms.push_back({{"partition", lambda.parts()}, {"mult", rational_json(mult)}});
    return terms;
}

nlohmann::json table_entry_json(TableObject object, int degree, const SpDecomposition& dec,
                                int sym_cap, int t_cap) {
    return {{"object", table_object_name(object)},
            {"degree", degree},
            {"terms", sp_terms_json(dec)},
            {"caps", {{"sym", sym_cap}, {"t", t_cap}}}};
}

nlohmann::json table_json(const CharacterTable& table, int first_degree) {
    nlohmann::json out = nlohmann::json::array();
    for (int n = first_degree; n <= table.max_degree(); ++n)
        out.push_back(table_entry_json(table.object(), n, table.degree(n), table.sym_cap(),
                                       table.t_cap()));
    return out;
}

nlohmann::json scalar_series_json(const CharSeries& series) {
    nlohmann::json out = nlohmann::json::array();
    for (int j = 0; j <= series.t_cap(); ++j) {
        Rational c = epsilon(series.at(j));
        out.push_back(rational_json(c));
    }
    return out;
}

std::string schur_series_to_text(const CharSeries& series) {
    std::ostringstream os;
    for (int j = 0; j <= series.t_cap(); ++j) {
        os << "t^" << j << ":";
        auto schur_coeffs = to_schur_basis(series.at(j));
        if (schur_coeffs.empty()) {
            os << " 0\n";
            continue;
        }
        bool first = true;
        for (const auto& [lambda, c] : schur_coeffs) {
            os << (first ? " " : " + ");
            first = false;
            if (c != 1)
                os << c.get_str() << " ";
            os << "s(" << partition_to_text(lambda) << ")";
        }
        os << "\n";
    }
    return os.str();
}

nlohmann::json schur_series_json(const CharSeries& series) {
    nlohmann::json out = nlohmann::json::array();
    for (int j = 0; j <= series.t_cap(); ++j) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [lambda, c] : to_schur_basis(series.at(j)))
            terms.push_back({{"partition", lambda.parts()}, {"mult", rational_json(c)}});
        out.push_back({{"t", j}, {"terms", std::move(terms)}});
    }
    return out;
}

namespace {

GoldenTable parse_golden_table(const nlohmann::json& doc) {
    GoldenTable out;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        int degree = std::stoi(it.key());
        SpDecomposition dec;
        for (const auto& term : it.value()) {
            std::vector<int> parts = term.at(0).get<std::vector<int>>();
            long mult = term.at(1).get<long>();
            dec.add(Partition(std::move(parts)), Rational(mult));
        }
        out.emplace(degree, std::move(dec));
    }
    return out;
}

}  // namespace

GoldenFixture load_golden_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open golden tables file '" + path + "'");
    nlohmann::json doc = nlohmann::json::parse(in);
    GoldenFixture fixture;
    fixture.a = parse_golden_table(doc.at("A"));
    fixture.torelli = parse_golden_table(doc.at("torelli"));
    return fixture;
}

std::vector<GoldenDiff> golden_check(const GoldenTable& fixture, const CharacterTable& computed) {
    std::vector<GoldenDiff> diffs;
    for (const auto& [degree, expected] : fixture) {
        if (degree > computed.max_degree())
            throw Error("computed table does not cover golden degree " + std::to_string(degree));
        const SpDecomposition& actual = computed.degree(degree);
        for (const auto& [lambda, mult] : expected.terms())
            if (actual.multiplicity(lambda) != mult)
                diffs.push_back({degree, lambda, mult, actual.multiplicity(lambda)});
        for (const auto& [lambda, mult] : actual.terms())
            if (is_zero(expected.multiplicity(lambda)))
                diffs.push_back({degree, lambda, Rational(0), mult});
    }
    return diffs;
}

std::string default_tables_path() {
    if (const char* env = std::getenv("SYMCHAR_TABLES"))
        return env;
    namespace fs = std::filesystem;
    // Try the repository layout relative to the current directory.
    for (const char* candidate : {"data/paper_tables.json", "../data/paper_tables.json",
                                  "../../data/paper_tables.json"}) {
        std::error_code ec;
        if (fs::exists(candidate, ec))
            return candidate;
    }
    return "data/paper_tables.json";
}

}  // namespace symchar
