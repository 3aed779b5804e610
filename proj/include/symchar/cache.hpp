#pragma once

#include <optional>
#include <string>

#include "symchar/charseries.hpp"

namespace symchar {

struct CacheKey {
    std::string op;       // e.g. "exp_ch_v"
    int sym_cap = 0;
    int t_cap = 0;
    std::string variant;  // e.g. "generic" / "gamma"
    std::string fingerprint;
};

// Disk cache of exact series: a versioned container holding the caps, the
// fingerprint, and the sparse p-basis coefficients as (partition, numerator,
// denominator) triples. Round-trips are exact. A corrupted or mismatched
// file is reported on stderr and ignored.
std::optional<CharSeries> cache_load(const std::string& dir, const CacheKey& key);
void cache_store(const std::string& dir, const CacheKey& key, const CharSeries& series);

std::string cache_file_name(const CacheKey& key);

}  // namespace symchar
