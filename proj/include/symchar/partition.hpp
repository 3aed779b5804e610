#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "symchar/rational.hpp"

namespace symchar {

// Weakly decreasing sequence of positive integers. Immutable value type;
// indexes every sparse container in the engine.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition single(int part);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // m[i] = number of parts equal to i+1, for i+1 up to the largest part.
    std::vector<int> multiplicities() const;

    Partition conjugate() const;

    // Multiset union of parts.
    Partition merged_with(const Partition& other) const;

    // Every part multiplied by n.
    Partition stretched(int n) const;

    // Canonical order: weight ascending, then reverse-lexicographic on parts,
    // so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
    std::strong_ordering operator<=>(const Partition& other) const;
    bool operator==(const Partition& other) const = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of n, in canonical order, optionally bounded. A negative
// bound means unbounded. n = 0 yields the singleton {empty partition}.
std::vector<Partition> partitions_of(int n, int max_part = -1, int max_length = -1);

// All partitions of weight <= max_weight, in canonical order.
std::vector<Partition> partitions_up_to(int max_weight);

// Number of partitions of n.
long long partition_count(int n);

// Centralizer order prod_i i^{m_i} m_i!; n!/z(lambda) is the size of the
// conjugacy class of cycle type lambda in the symmetric group.
Integer z_centralizer(const Partition& lambda);

// Number-theoretic Moebius function; n must be >= 1.
int mobius(int n);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : p.parts()) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace symchar
