#include "symchar/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <utility>

namespace symchar {

SymFn SymFn::constant(const Rational& c, int cap) {
    SymFn f(cap);
    f.add_term(Partition(), c);
    return f;
}

Rational SymFn::coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFn::add_term(const Partition& mu, const Rational& c) {
    if (sgn(c) == 0 || mu.weight() > cap_)
        return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

SymFn SymFn::truncated(int new_cap) const {
    if (new_cap >= cap_)
        return *this;
    SymFn out(new_cap);
    for (const auto& [mu, c] : terms_) {
        if (mu.weight() > new_cap)
            break;  // canonical order is weight-ascending
        out.terms_.emplace_hint(out.terms_.end(), mu, c);
    }
    return out;
}

SymFn SymFn::with_cap(int new_cap) const {
    if (new_cap < cap_)
        return truncated(new_cap);
    SymFn out = *this;
    out.cap_ = new_cap;
    return out;
}

SymFn SymFn::homogeneous_part(int n) const {
    SymFn out(cap_);
    for (const auto& [mu, c] : terms_)
        if (mu.weight() == n)
            out.terms_.emplace_hint(out.terms_.end(), mu, c);
    return out;
}

int SymFn::max_degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.weight();
}

void SymFn::shrink_cap(int new_cap) {
    if (new_cap >= cap_)
        return;
    cap_ = new_cap;
    // Canonical order is weight-ascending, and the single part (w) is the
    // least partition of weight w, so everything past the cap is a suffix.
    terms_.erase(terms_.lower_bound(Partition::single(new_cap + 1)), terms_.end());
}

SymFn& SymFn::operator+=(const SymFn& other) {
    shrink_cap(other.cap_);
    for (const auto& [mu, c] : other.terms_)
        add_term(mu, c);
    return *this;
}

SymFn& SymFn::operator-=(const SymFn& other) {
    shrink_cap(other.cap_);
    for (const auto& [mu, c] : other.terms_)
        add_term(mu, -c);
    return *this;
}

SymFn SymFn::operator-() const {
    SymFn out(cap_);
    for (const auto& [mu, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), mu, -c);
    return out;
}

SymFn operator*(const SymFn& a, const SymFn& b) {
    int cap = std::min(a.cap(), b.cap());
    SymFn out(cap);
    // Iterate the smaller operand outermost.
    const SymFn& outer = a.terms().size() <= b.terms().size() ? a : b;
    const SymFn& inner = a.terms().size() <= b.terms().size() ? b : a;
    for (const auto& [mu, c] : outer.terms()) {
        int wa = mu.weight();
        if (wa > cap)
            break;
        for (const auto& [nu, d] : inner.terms()) {
            if (wa + nu.weight() > cap)
                break;
            out.add_term(mu.merged_with(nu), c * d);
        }
    }
    return out;
}

SymFn operator*(const SymFn& a, const Rational& c) {
    SymFn out(a.cap());
    if (is_zero(c))
        return out;
    for (const auto& [mu, v] : a.terms())
        out.add_term(mu, v * c);
    return out;
}

std::string SymFn::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << c.get_str() << " p[";
        for (std::size_t i = 0; i < mu.parts().size(); ++i)
            os << (i ? "," : "") << mu.parts()[i];
        os << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Generators

SymFn p_generator(int n, int cap) {
    if (n < 1)
        throw Error("p_generator: index must be >= 1");
    SymFn f(cap);
    if (n > cap)
        throw CapError("p_generator: index " + std::to_string(n) +
                       " exceeds symmetric cap " + std::to_string(cap));
    f.add_term(Partition::single(n), 1);
    return f;
}

namespace {

// Full p-expansions of h_n, memoized; concurrent reads, single writer.
class CompleteHomogeneousTable {
public:
    SymFn get(int n) {
        {
            std::shared_lock lk(mutex_);
            if (n < static_cast<int>(table_.size()))
                return table_[n];
        }
        std::unique_lock lk(mutex_);
        while (static_cast<int>(table_.size()) <= n) {
            int m = static_cast<int>(table_.size());
            if (m == 0) {
                table_.push_back(SymFn::one(0));
                continue;
            }
            // Newton: m h_m = sum_{k=1..m} h_{m-k} p_k
            SymFn hm(m);
            for (int k = 1; k <= m; ++k)
                for (const auto& [mu, c] : table_[m - k].terms())
                    hm.add_term(mu.merged_with(Partition::single(k)), c);
            hm = hm * Rational(1, m);
            table_.push_back(std::move(hm));
        }
        return table_[n];
    }

private:
    std::shared_mutex mutex_;
    std::vector<SymFn> table_;  // table_[n] has cap n
};

CompleteHomogeneousTable& h_table() {
    static CompleteHomogeneousTable t;
    return t;
}

}  // namespace

SymFn h_generator(int n, int cap) {
    if (n < 0)
        throw Error("h_generator: index must be >= 0");
    if (n > cap)
        throw CapError("h_generator: index " + std::to_string(n) +
                       " exceeds symmetric cap " + std::to_string(cap));
    return h_table().get(n).with_cap(cap);
}

SymFn e_generator(int n, int cap) {
    if (n < 0)
        throw Error("e_generator: index must be >= 0");
    if (n > cap)
        throw CapError("e_generator: index " + std::to_string(n) +
                       " exceeds symmetric cap " + std::to_string(cap));
    return omega(h_generator(n, cap));
}

SymFn omega(const SymFn& f) {
    SymFn out(f.cap());
    for (const auto& [mu, c] : f.terms()) {
        int sign = (mu.weight() - mu.length()) % 2 == 0 ? 1 : -1;
        out.add_term(mu, sign * c);
    }
    return out;
}

SymFn omega_tilde(const SymFn& f) {
    SymFn out(f.cap());
    for (const auto& [mu, c] : f.terms()) {
        int sign = mu.length() % 2 == 0 ? 1 : -1;
        out.add_term(mu, sign * c);
    }
    return out;
}

Rational epsilon(const SymFn& f) {
    return f.constant_term();
}

// ---------------------------------------------------------------------------
// Jacobi-Trudi determinants
//
// The determinant is first expanded over monomials in the h-generators
// (exact integer bookkeeping on multisets of h-indices), and converted to
// the p-basis once at the end. Laplace expansion along rows with minors
// memoized per column subset; row lengths stay small (<= length of lambda).

namespace {

// A polynomial in the h-generators: multiset of h-indices -> coefficient.
using HPoly = std::map<Partition, Rational>;

void hpoly_accumulate(HPoly& target, const Partition& key, const Rational& c) {
    auto [it, inserted] = target.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second))
            target.erase(it);
    }
}

// entries(i, j) returns the (i, j) entry as a list of h-indices, where index
// 0 stands for h_0 = 1 and negative indices are dropped.
template <typename EntryFn>
HPoly h_determinant(int size, EntryFn entries) {
    if (size > 25)
        throw Error("Jacobi-Trudi determinant of size " + std::to_string(size) +
                    " is too large; use a shorter partition");
    // Laplace expansion row by row, memoized on the mask of unused columns
    // (the row index is determined by the popcount).
    std::map<unsigned, HPoly> cache;
    std::function<const HPoly&(unsigned)> minor = [&](unsigned mask) -> const HPoly& {
        int row = size - __builtin_popcount(mask);
        if (auto it = cache.find(mask); it != cache.end())
            return it->second;
        HPoly result;
        if (mask == 0) {
            hpoly_accumulate(result, Partition(), 1);
        } else {
            int sign = 1;
            for (int j = 0; j < size; ++j) {
                if (!(mask & (1u << j)))
                    continue;
                const HPoly& sub = minor(mask & ~(1u << j));
                for (int idx : entries(row, j)) {
                    if (idx < 0)
                        continue;
                    Partition key = idx == 0 ? Partition() : Partition::single(idx);
                    for (const auto& [mu, c] : sub)
                        hpoly_accumulate(result, mu.merged_with(key), sign * c);
                }
                sign = -sign;
            }
        }
        return cache.emplace(mask, std::move(result)).first->second;
    };
    return minor((1u << size) - 1);
}

SymFn hpoly_to_p_basis(const HPoly& poly, int cap) {
    SymFn out(cap);
    for (const auto& [mu, c] : poly) {
        SymFn prod = SymFn::one(cap);
        for (int idx : mu.parts())
            prod = prod * h_generator(idx, cap);
        out += prod * c;
    }
    return out;
}

}  // namespace

SymFn schur(const Partition& lambda, int cap) {
    if (lambda.weight() > cap)
        throw CapError("schur: |lambda| exceeds symmetric cap");
    int l = lambda.length();
    if (l == 0)
        return SymFn::one(cap);
    HPoly det = h_determinant(l, [&](int i, int j) {
        return std::vector<int>{lambda.parts()[i] - i + j};
    });
    return hpoly_to_p_basis(det, cap);
}

SymFn sp_schur(const Partition& lambda, int cap) {
    if (lambda.weight() > cap)
        throw CapError("sp_schur: |lambda| exceeds symmetric cap");
    int l = lambda.length();
    if (l == 0)
        return SymFn::one(cap);
    // Half the determinant of h_{lambda_i-i+j} + h_{lambda_i-i-j+2} over
    // 1-based indices; the first column is doubled, which the 1/2 absorbs.
    HPoly det = h_determinant(l, [&](int i, int j) {
        return std::vector<int>{lambda.parts()[i] - i + j, lambda.parts()[i] - i - j};
    });
    return hpoly_to_p_basis(det, cap) * Rational(1, 2);
}

SymFn generator(Basis basis, const Partition& index, int cap) {
    switch (basis) {
        case Basis::P:
            if (index.length() != 1)
                throw Error("generator: p-basis index must be a single part");
            return p_generator(index.parts()[0], cap);
        case Basis::H:
            if (index.length() > 1)
                throw Error("generator: h-basis index must be a single part");
            return h_generator(index.empty() ? 0 : index.parts()[0], cap);
        case Basis::E:
            if (index.length() > 1)
                throw Error("generator: e-basis index must be a single part");
            return e_generator(index.empty() ? 0 : index.parts()[0], cap);
        case Basis::Schur:
            return schur(index, cap);
        case Basis::SpSchur:
            return sp_schur(index, cap);
    }
    throw Error("generator: unknown basis");
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama characters

namespace {

class CharacterTableCache {
public:
    Integer get(const Partition& lambda, const Partition& mu) {
        Key key{lambda, mu};
        {
            std::shared_lock lk(mutex_);
            if (auto it = memo_.find(key); it != memo_.end())
                return it->second;
        }
        Integer value = compute(lambda, mu);
        std::unique_lock lk(mutex_);
        return memo_.emplace(std::move(key), std::move(value)).first->second;
    }

private:
    using Key = std::pair<Partition, Partition>;

    Integer compute(const Partition& lambda, const Partition& mu) {
        if (mu.empty())
            return lambda.empty() ? 1 : 0;
        int r = mu.parts().front();
        Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
        // Border strips of size r via beta-numbers (first-column hooks).
        int l = lambda.length();
        std::vector<int> beta(l);
        for (int i = 0; i < l; ++i)
            beta[i] = lambda.parts()[i] + l - 1 - i;
        Integer total = 0;
        for (int i = 0; i < l; ++i) {
            int nb = beta[i] - r;
            if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end())
                continue;
            int height = 0;
            for (int b : beta)
                if (nb < b && b < beta[i])
                    ++height;
            std::vector<int> nbeta = beta;
            nbeta[i] = nb;
            std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
            std::vector<int> nparts;
            for (int j = 0; j < l; ++j) {
                int part = nbeta[j] - (l - 1 - j);
                if (part > 0)
                    nparts.push_back(part);
            }
            Integer sub = get(Partition(std::move(nparts)), rest);
            if (height % 2 == 0)
                total += sub;
            else
                total -= sub;
        }
        return total;
    }

    std::shared_mutex mutex_;
    std::map<Key, Integer> memo_;
};

CharacterTableCache& character_cache() {
    static CharacterTableCache c;
    return c;
}

}  // namespace

Integer symmetric_group_character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw Error("symmetric_group_character: |lambda| != |mu|");
    return character_cache().get(lambda, mu);
}

std::map<Partition, Rational> to_schur_basis(const SymFn& f) {
    // <p_mu, p_mu> = z(mu), Schur functions orthonormal, so the coefficient
    // a_lambda = <f, s_lambda> = sum_mu chi^lambda(mu) c_mu, degreewise.
    std::map<Partition, Rational> out;
    std::map<int, std::vector<std::pair<Partition, Rational>>> by_degree;
    for (const auto& [mu, c] : f.terms())
        by_degree[mu.weight()].emplace_back(mu, c);
    for (const auto& [n, comp] : by_degree) {
        for (const Partition& lambda : partitions_of(n)) {
            Rational a = 0;
            for (const auto& [mu, c] : comp)
                a += Rational(symmetric_group_character(lambda, mu)) * c;
            if (!is_zero(a))
                out.emplace(lambda, a);
        }
    }
    return out;
}

SymFn from_schur_basis(const std::map<Partition, Rational>& coeffs, int cap) {
    SymFn out(cap);
    for (const auto& [lambda, c] : coeffs) {
        // s_lambda = sum_mu chi^lambda(mu)/z(mu) p_mu
        for (const Partition& mu : partitions_of(lambda.weight())) {
            Integer chi = symmetric_group_character(lambda, mu);
            if (chi != 0)
                out.add_term(mu, c * Rational(chi) / Rational(z_centralizer(mu)));
        }
    }
    return out;
}

}  // namespace symchar
