#pragma once

#include <map>
#include <string>
#include <vector>

#include "symchar/partition.hpp"
#include "symchar/rational.hpp"

namespace symchar {

// Element of the rational symmetric-function ring, stored sparsely in the
// power-sum basis: terms maps a partition lambda to the coefficient of
// p_lambda = p_{lambda_1} ... p_{lambda_l}. Everything above the symmetric
// degree cap is identically truncated away. Immutable in spirit: all
// operations return fresh values.
class SymFn {
public:
    using TermMap = std::map<Partition, Rational>;

    explicit SymFn(int cap) : cap_(cap) {}

    static SymFn zero(int cap) { return SymFn(cap); }
    static SymFn constant(const Rational& c, int cap);
    static SymFn one(int cap) { return constant(1, cap); }

    int cap() const { return cap_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const Partition& mu) const;
    // Coefficient of the empty p-monomial (the augmentation).
    Rational constant_term() const { return coeff(Partition()); }

    // Accumulate c * p_mu, dropping the term if it cancels or exceeds cap.
    void add_term(const Partition& mu, const Rational& c);

    SymFn truncated(int new_cap) const;
    // Copy carrying the given cap: lifts freely, truncates when smaller.
    SymFn with_cap(int new_cap) const;
    // Restriction to the homogeneous component of degree n.
    SymFn homogeneous_part(int n) const;
    int max_degree() const;  // -1 if zero

    SymFn& operator+=(const SymFn& other);
    SymFn& operator-=(const SymFn& other);
    SymFn operator-() const;
    friend SymFn operator+(SymFn a, const SymFn& b) { return a += b; }
    friend SymFn operator-(SymFn a, const SymFn& b) { return a -= b; }
    friend SymFn operator*(const SymFn& a, const SymFn& b);
    friend SymFn operator*(const SymFn& a, const Rational& c);
    friend SymFn operator*(const Rational& c, const SymFn& a) { return a * c; }

    bool operator==(const SymFn& other) const { return terms_ == other.terms_; }

    // p-monomials in canonical partition order, e.g. "1/2 p[2] + 1/2 p[1,1]".
    std::string to_string() const;

private:
    void shrink_cap(int new_cap);

    TermMap terms_;
    int cap_;
};

// Generators, all expanded in the p-basis and truncated at cap.
SymFn p_generator(int n, int cap);                    // n >= 1
SymFn h_generator(int n, int cap);                    // h_0 = 1
SymFn e_generator(int n, int cap);                    // e_n = omega(h_n)
SymFn schur(const Partition& lambda, int cap);        // Jacobi-Trudi determinant
SymFn sp_schur(const Partition& lambda, int cap);     // symplectic Jacobi-Trudi

enum class Basis { P, H, E, Schur, SpSchur };
SymFn generator(Basis basis, const Partition& index, int cap);

// Involutions and the augmentation.
SymFn omega(const SymFn& f);        // p_n -> (-1)^(n-1) p_n
SymFn omega_tilde(const SymFn& f);  // p_n -> -p_n
Rational epsilon(const SymFn& f);   // f(0)

// Irreducible symmetric-group character chi^lambda at the class of cycle
// type mu, |lambda| = |mu|, by the memoized Murnaghan-Nakayama recursion.
Integer symmetric_group_character(const Partition& lambda, const Partition& mu);

// Schur expansion: the nonzero a_lambda with sum a_lambda s_lambda = f.
std::map<Partition, Rational> to_schur_basis(const SymFn& f);

// Assemble sum of c_lambda s_lambda.
SymFn from_schur_basis(const std::map<Partition, Rational>& coeffs, int cap);

}  // namespace symchar
