#include "symchar/hall_ops.hpp"

#include <algorithm>

#include "symchar/parallel.hpp"

namespace symchar {

Rational hall_pairing(const SymFn& f, const SymFn& g) {
    // Iterate the smaller term map, look up in the other.
    const SymFn& small = f.terms().size() <= g.terms().size() ? f : g;
    const SymFn& large = f.terms().size() <= g.terms().size() ? g : f;
    Rational total = 0;
    for (const auto& [mu, c] : small.terms()) {
        Rational d = large.coeff(mu);
        if (!is_zero(d))
            total += c * d * Rational(z_centralizer(mu));
    }
    return total;
}

namespace {

// Multiplicity view of a partition as (part, count) pairs, descending parts.
std::vector<std::pair<int, int>> run_lengths(const Partition& p) {
    std::vector<std::pair<int, int>> out;
    for (int v : p.parts()) {
        if (!out.empty() && out.back().first == v)
            ++out.back().second;
        else
            out.emplace_back(v, 1);
    }
    return out;
}

// Remove `count` copies of `part` from lambda; nullopt when not contained.
std::optional<Partition> remove_parts(const Partition& lambda, int part, int count) {
    std::vector<int> parts;
    parts.reserve(lambda.parts().size());
    int remaining = count;
    for (int v : lambda.parts()) {
        if (v == part && remaining > 0)
            --remaining;
        else
            parts.push_back(v);
    }
    if (remaining > 0)
        return std::nullopt;
    return Partition(std::move(parts));
}

}  // namespace

SymFn perp(const SymFn& f, const SymFn& g) {
    // p_mu^perp = prod over parts i of mu (with multiplicity m) of (i d/dp_i)^m.
    SymFn out(g.cap());
    for (const auto& [mu, cf] : f.terms()) {
        auto mu_runs = run_lengths(mu);
        for (const auto& [lambda, cg] : g.terms()) {
            Rational factor = cf * cg;
            std::optional<Partition> key = lambda;
            for (const auto& [part, m] : mu_runs) {
                key = remove_parts(*key, part, m);
                if (!key)
                    break;
                // (i d/dp_i)^m knocks down p_i^M with falling factorial M!/(M-m)!
                int big = 0;
                for (int v : lambda.parts())
                    if (v == part)
                        ++big;
                Integer fall = 1;
                for (int s = 0; s < m; ++s)
                    fall *= big - s;
                Integer pw;
                mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part),
                              static_cast<unsigned long>(m));
                factor *= Rational(fall * pw);
            }
            if (key && !is_zero(factor))
                out.add_term(*key, factor);
        }
    }
    return out;
}

SymFn heat_once(HeatKind kind, const SymFn& f) {
    int d_sign = kind == HeatKind::DPrime ? 1 : -1;
    SymFn out(f.cap());
    for (const auto& [lambda, c] : f.terms()) {
        for (const auto& [part, m] : run_lengths(lambda)) {
            if (m >= 2) {
                // n/2 d^2/dp_n^2
                auto key = remove_parts(lambda, part, 2);
                out.add_term(*key, c * make_rational(static_cast<long>(part) * m * (m - 1), 2));
            }
            if (part % 2 == 0) {
                // -+ d/dp_{2n}
                auto key = remove_parts(lambda, part, 1);
                out.add_term(*key, c * Rational(d_sign * m));
            }
        }
    }
    return out;
}

SymFn apply_heat(HeatKind kind, int sign, const SymFn& f) {
    if (sign != 1 && sign != -1)
        throw Error("apply_heat: sign must be +1 or -1");
    SymFn result = f;
    SymFn current = f;
    Rational factor = 1;
    for (int k = 1; !current.is_zero(); ++k) {
        current = heat_once(kind, current);
        factor *= Rational(sign, k);
        if (!current.is_zero())
            result += current * factor;
    }
    return result;
}

CharSeries apply_heat(HeatKind kind, int sign, const CharSeries& f, int threads) {
    CharSeries out(f.sym_cap(), f.t_cap());
    std::vector<SymFn> slots(f.t_cap() + 1, SymFn(f.sym_cap()));
    parallel_for(f.t_cap() + 1, threads,
                 [&](std::size_t j) { slots[j] = apply_heat(kind, sign, f.at(static_cast<int>(j))); });
    for (int j = 0; j <= f.t_cap(); ++j)
        out.set(j, std::move(slots[j]));
    return out;
}

SpDecomposition::SpDecomposition(TermMap terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = is_zero(it->second) ? terms_.erase(it) : std::next(it);
}

Rational SpDecomposition::multiplicity(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SpDecomposition::add(const Partition& lambda, const Rational& mult) {
    if (is_zero(mult))
        return;
    auto [it, inserted] = terms_.try_emplace(lambda, mult);
    if (!inserted) {
        it->second += mult;
        if (is_zero(it->second))
            terms_.erase(it);
    }
}

bool SpDecomposition::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return is_integer(kv.second); });
}

bool SpDecomposition::is_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return sgn(kv.second) >= 0; });
}

int SpDecomposition::max_weight() const {
    int w = -1;
    for (const auto& [lambda, c] : terms_)
        w = std::max(w, lambda.weight());
    return w;
}

SpDecomposition to_symplectic_basis(const SymFn& f) {
    SymFn lifted = apply_heat(HeatKind::D, +1, f);
    SpDecomposition out;
    for (const auto& [lambda, c] : to_schur_basis(lifted))
        out.add(lambda, c);
    return out;
}

SymFn from_symplectic_basis(const SpDecomposition& dec, int cap) {
    SymFn out(cap);
    for (const auto& [lambda, mult] : dec.terms()) {
        if (lambda.weight() > cap)
            throw CapError("from_symplectic_basis: |lambda| exceeds cap");
        out += sp_schur(lambda, cap) * mult;
    }
    return out;
}

}  // namespace symchar
