#pragma once

#include <vector>

#include "symchar/symfunc.hpp"

namespace symchar::oracle {

// A finite alphabet of rational values for the variables x_1..x_k.
// Evaluation at a specialization is a ring homomorphism; it is faithful on
// symmetric functions of degree <= k (caller's responsibility).
struct Specialization {
    std::vector<Rational> values;
};

// Substitute p_n = sum_i x_i^n and evaluate the p-polynomial exactly.
// Shares only the storage format with the engine, none of its arithmetic.
Rational evaluate(const SymFn& f, const Specialization& s);

// Plethysm from first principles: expand g into monomials in k variables
// (requiring nonnegative integer coefficients), substitute that monomial
// multiset as the alphabet of f, and reconstruct the p-expansion of the
// result by exact linear solving, degree by degree. Exponential cost;
// intended for deg f * deg g <= 8 with k >= that degree.
SymFn brute_plethysm(const SymFn& f, const SymFn& g, int k);

}  // namespace symchar::oracle
