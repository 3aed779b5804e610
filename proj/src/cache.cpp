#include "symchar/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace symchar {

namespace {

constexpr int kFormatVersion = 1;

}  // namespace

std::string cache_file_name(const CacheKey& key) {
    return key.op + "_S" + std::to_string(key.sym_cap) + "_T" + std::to_string(key.t_cap) +
           "_" + key.variant + "_" + key.fingerprint + ".json";
}

std::optional<CharSeries> cache_load(const std::string& dir, const CacheKey& key) {
    namespace fs = std::filesystem;
    fs::path path = fs::path(dir) / cache_file_name(key);
    std::error_code ec;
    if (dir.empty() || !fs::exists(path, ec))
        return std::nullopt;
    try {
        std::ifstream in(path);
        nlohmann::json doc = nlohmann::json::parse(in);
        if (doc.at("format_version").get<int>() != kFormatVersion ||
            doc.at("op").get<std::string>() != key.op ||
            doc.at("sym_cap").get<int>() != key.sym_cap ||
            doc.at("t_cap").get<int>() != key.t_cap ||
            doc.at("variant").get<std::string>() != key.variant ||
            doc.at("fingerprint").get<std::string>() != key.fingerprint)
            throw Error("cache header mismatch");
        CharSeries out(key.sym_cap, key.t_cap);
        for (const auto& coeff : doc.at("coefficients")) {
            int j = coeff.at("t").get<int>();
            SymFn f(key.sym_cap);
            for (const auto& term : coeff.at("terms")) {
                std::vector<int> parts = term.at(0).get<std::vector<int>>();
                Integer num(term.at(1).get<std::string>());
                Integer den(term.at(2).get<std::string>());
                if (den == 0)
                    throw Error("zero denominator");
                Rational c(num, den);
                c.canonicalize();
                f.add_term(Partition(std::move(parts)), c);
            }
            out.set(j, std::move(f));
        }
        return out;
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring corrupt cache file " << path.string() << " (" << e.what()
                  << ")\n";
        return std::nullopt;
    }
}

void cache_store(const std::string& dir, const CacheKey& key, const CharSeries& series) {
    if (dir.empty())
        return;
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    nlohmann::json doc;
    doc["format_version"] = kFormatVersion;
    doc["op"] = key.op;
    doc["sym_cap"] = key.sym_cap;
    doc["t_cap"] = key.t_cap;
    doc["variant"] = key.variant;
    doc["fingerprint"] = key.fingerprint;
    nlohmann::json coeffs = nlohmann::json::array();
    for (int j = 0; j <= series.t_cap(); ++j) {
        if (series.at(j).is_zero())
            continue;
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [mu, c] : series.at(j).terms())
            terms.push_back({mu.parts(), c.get_num().get_str(), c.get_den().get_str()});
        coeffs.push_back({{"t", j}, {"terms", std::move(terms)}});
    }
    doc["coefficients"] = std::move(coeffs);

    fs::path path = fs::path(dir) / cache_file_name(key);
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            return;  // cache is best-effort
        out << doc.dump();
    }
    fs::rename(tmp, path, ec);
    if (ec)
        fs::remove(tmp, ec);
}

}  // namespace symchar
