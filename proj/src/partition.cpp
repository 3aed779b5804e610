#include "symchar/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace symchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw Error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::single(int part) {
    return Partition(std::vector<int>{part});
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts_.empty() ? 0 : parts_.front());
    for (int v : parts_)
        ++m[v - 1];
    return m;
}

Partition Partition::conjugate() const {
    if (parts_.empty())
        return {};
    std::vector<int> out(parts_.front());
    for (int v : parts_)
        for (int i = 0; i < v; ++i)
            ++out[i];
    return Partition(std::move(out));
}

Partition Partition::merged_with(const Partition& other) const {
    Partition out;
    out.parts_.resize(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               out.parts_.begin(), std::greater<int>());
    out.weight_ = weight_ + other.weight_;
    return out;
}

Partition Partition::stretched(int n) const {
    Partition out(*this);
    for (int& v : out.parts_)
        v *= n;
    out.weight_ *= n;
    return out;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    if (auto c = weight_ <=> other.weight_; c != 0)
        return c;
    // Reverse-lexicographic: larger leading parts come first.
    return other.parts_ <=> parts_;
}

namespace {

void enumerate(int n, int max_part, int max_length, std::vector<int>& stack,
               std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(stack));
        return;
    }
    if (max_length == 0)
        return;
    for (int k = std::min(n, max_part); k >= 1; --k) {
        stack.push_back(k);
        enumerate(n - k, k, max_length - 1, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part, int max_length) {
    if (n < 0)
        throw Error("partitions_of: n must be nonnegative");
    if (max_part < 0)
        max_part = n;
    if (max_length < 0)
        max_length = n;
    std::vector<Partition> out;
    std::vector<int> stack;
    enumerate(n, max_part, max_length, stack, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto layer = partitions_of(n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

long long partition_count(int n) {
    // Euler's pentagonal-number recurrence.
    std::vector<long long> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m)
                break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m)
                total += sign * p[m - g1];
            if (g2 <= m)
                total += sign * p[m - g2];
        }
        p[m] = total;
    }
    return p[n];
}

Integer z_centralizer(const Partition& lambda) {
    Integer z = 1;
    const auto& parts = lambda.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        auto mult = static_cast<unsigned long>(j - i);
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts[i]), mult);
        Integer fact;
        mpz_fac_ui(fact.get_mpz_t(), mult);
        z *= pw * fact;
        i = j;
    }
    return z;
}

int mobius(int n) {
    if (n < 1)
        throw Error("mobius: n must be >= 1");
    int result = 1;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0)
                return 0;
            result = -result;
        }
    }
    if (n > 1)
        result = -result;
    return result;
}

}  // namespace symchar
