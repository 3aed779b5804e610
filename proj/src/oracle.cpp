#include "symchar/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace symchar::oracle {

Rational evaluate(const SymFn& f, const Specialization& s) {
    Rational total = 0;
    for (const auto& [mu, c] : f.terms()) {
        Rational term = c;
        for (int part : mu.parts()) {
            Rational power_sum = 0;
            for (const Rational& x : s.values) {
                Rational xp = 1;
                for (int e = 0; e < part; ++e)
                    xp *= x;
                power_sum += xp;
            }
            term *= power_sum;
        }
        total += term;
    }
    return total;
}

namespace {

// Dense-exponent polynomials in k variables.
using Monomial = std::vector<int>;
using Poly = std::map<Monomial, Rational>;

void poly_add(Poly& target, const Monomial& m, const Rational& c) {
    auto [it, inserted] = target.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second))
            target.erase(it);
    }
}

Poly poly_mul(const Poly& a, const Poly& b, int k) {
    Poly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m(k);
            for (int i = 0; i < k; ++i)
                m[i] = ma[i] + mb[i];
            poly_add(out, m, ca * cb);
        }
    return out;
}

Poly power_sum_poly(int n, int k) {
    Poly out;
    for (int i = 0; i < k; ++i) {
        Monomial m(k, 0);
        m[i] = n;
        poly_add(out, m, 1);
    }
    return out;
}

Poly expand_p_expression(const SymFn& f, int k) {
    Poly out;
    for (const auto& [mu, c] : f.terms()) {
        Poly term;
        poly_add(term, Monomial(k, 0), c);
        for (int part : mu.parts())
            term = poly_mul(term, power_sum_poly(part, k), k);
        for (const auto& [m, v] : term)
            poly_add(out, m, v);
    }
    return out;
}

int monomial_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

// Solve sum_nu c_nu * basis[nu] = rhs exactly; throws when inconsistent or
// underdetermined.
std::map<Partition, Rational> solve_in_basis(const std::vector<Partition>& candidates,
                                             const std::vector<Poly>& basis, const Poly& rhs) {
    // Column-major dense system over the union of monomials.
    std::map<Monomial, std::size_t> rows;
    auto row_of = [&](const Monomial& m) {
        return rows.try_emplace(m, rows.size()).first->second;
    };
    for (const auto& b : basis)
        for (const auto& [m, c] : b)
            row_of(m);
    for (const auto& [m, c] : rhs)
        row_of(m);
    std::size_t nrows = rows.size(), ncols = candidates.size();
    std::vector<std::vector<Rational>> mat(nrows, std::vector<Rational>(ncols + 1, Rational(0)));
    for (std::size_t j = 0; j < ncols; ++j)
        for (const auto& [m, c] : basis[j])
            mat[rows.at(m)][j] = c;
    for (const auto& [m, c] : rhs)
        mat[rows.at(m)][ncols] = c;

    std::vector<std::size_t> pivot_row(ncols);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t sel = rank;
        while (sel < nrows && is_zero(mat[sel][col]))
            ++sel;
        if (sel == nrows)
            throw Error("oracle: reconstruction system is underdetermined; raise k");
        std::swap(mat[sel], mat[rank]);
        Rational inv = 1 / mat[rank][col];
        for (auto& v : mat[rank])
            v *= inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank || is_zero(mat[r][col]))
                continue;
            Rational factor = mat[r][col];
            for (std::size_t c2 = col; c2 <= ncols; ++c2)
                mat[r][c2] -= factor * mat[rank][c2];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    for (std::size_t r = rank; r < nrows; ++r)
        if (!is_zero(mat[r][ncols]))
            throw Error("oracle: reconstruction system is inconsistent");
    std::map<Partition, Rational> out;
    for (std::size_t col = 0; col < ncols; ++col) {
        const Rational& c = mat[pivot_row[col]][ncols];
        if (!is_zero(c))
            out.emplace(candidates[col], c);
    }
    return out;
}

}  // namespace

SymFn brute_plethysm(const SymFn& f, const SymFn& g, int k) {
    // The alphabet of g: its monomials, with multiplicity.
    Poly g_poly = expand_p_expression(g, k);
    std::vector<std::pair<Monomial, long>> alphabet;
    for (const auto& [m, c] : g_poly) {
        if (!is_integer(c) || sgn(c) < 0)
            throw Error("brute_plethysm: g has a non-nonnegative-integer monomial coefficient");
        alphabet.emplace_back(m, c.get_num().get_si());
    }

    // p_n applied to the alphabet.
    auto alphabet_power = [&](int n) {
        Poly out;
        for (const auto& [m, count] : alphabet) {
            Monomial mn(k);
            for (int i = 0; i < k; ++i)
                mn[i] = m[i] * n;
            poly_add(out, mn, Rational(count));
        }
        return out;
    };

    Poly result;
    for (const auto& [mu, c] : f.terms()) {
        Poly term;
        poly_add(term, Monomial(k, 0), c);
        for (int part : mu.parts())
            term = poly_mul(term, alphabet_power(part), k);
        for (const auto& [m, v] : term)
            poly_add(result, m, v);
    }

    // Reconstruct the p-expansion degree by degree.
    std::map<int, Poly> by_degree;
    for (const auto& [m, c] : result)
        by_degree[monomial_degree(m)][m] = c;
    int out_cap = 0;
    for (const auto& [d, comp] : by_degree)
        out_cap = std::max(out_cap, d);
    SymFn out(out_cap);
    for (const auto& [d, comp] : by_degree) {
        if (d == 0) {
            out.add_term(Partition(), comp.begin()->second);
            continue;
        }
        if (d > k)
            throw Error("brute_plethysm: result degree exceeds variable count; raise k");
        std::vector<Partition> candidates = partitions_of(d);
        std::vector<Poly> basis;
        basis.reserve(candidates.size());
        for (const Partition& nu : candidates) {
            Poly b;
            poly_add(b, Monomial(k, 0), 1);
            for (int part : nu.parts())
                b = poly_mul(b, power_sum_poly(part, k), k);
            basis.push_back(std::move(b));
        }
        for (const auto& [nu, c] : solve_in_basis(candidates, basis, comp))
            out.add_term(nu, c);
    }
    return out;
}

}  // namespace symchar::oracle
