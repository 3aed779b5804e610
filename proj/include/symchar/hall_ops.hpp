#pragma once

#include <map>
#include <optional>

#include "symchar/charseries.hpp"

namespace symchar {

// Hall inner product, <p_lambda, p_mu> = z(lambda) delta_{lambda mu}.
Rational hall_pairing(const SymFn& f, const SymFn& g);

// The adjoint of multiplication by f: the differential operator
// f(d/dp_1, 2 d/dp_2, 3 d/dp_3, ...) applied to g.
SymFn perp(const SymFn& f, const SymFn& g);

// Degree-lowering heat-kernel operators in the p-variables:
//   D  = sum_n (n/2 d^2/dp_n^2 - d/dp_{2n})
//   D' = sum_n (n/2 d^2/dp_n^2 + d/dp_{2n})
enum class HeatKind { D, DPrime };

// One application of the operator itself.
SymFn heat_once(HeatKind kind, const SymFn& f);

// exp(sign * op)(f) as the finite sum of iterated applications; each
// application lowers symmetric degree by exactly 2, so the series length is
// floor(deg/2) + 1. sign must be +1 or -1.
SymFn apply_heat(HeatKind kind, int sign, const SymFn& f);
CharSeries apply_heat(HeatKind kind, int sign, const CharSeries& f, int threads = 1);

// Multiset of symplectic Schur multiplicities: represents sum of
// m_lambda s_<lambda>. Multiplicities are stored exactly; character inputs
// produce integers but intermediate queries may not.
class SpDecomposition {
public:
    using TermMap = std::map<Partition, Rational>;

    SpDecomposition() = default;
    explicit SpDecomposition(TermMap terms);

    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    Rational multiplicity(const Partition& lambda) const;
    void add(const Partition& lambda, const Rational& mult);

    bool is_integral() const;
    bool is_nonnegative() const;
    // Largest |lambda| present, -1 if empty.
    int max_weight() const;

    // Optional t-degree this decomposition came from.
    std::optional<int> degree_tag;

    bool operator==(const SpDecomposition& other) const { return terms_ == other.terms_; }

private:
    TermMap terms_;
};

// f = sum a_lambda s_<lambda> where sum a_lambda s_lambda = exp(+D) f.
SpDecomposition to_symplectic_basis(const SymFn& f);

// sum m_lambda s_<lambda> as a SymFn; exact inverse of to_symplectic_basis.
SymFn from_symplectic_basis(const SpDecomposition& dec, int cap);

}  // namespace symchar
