#pragma once

#include "symchar/charseries.hpp"

namespace symchar {

// Adams operation psi_n: p_k -> p_{nk}, t^j -> t^{nj}, coefficients fixed.
// Terms pushed past either cap vanish.
SymFn adams(int n, const SymFn& f);
CharSeries adams(int n, const CharSeries& f);

// Plethysm f o g: p_k in f becomes psi_k(g); t in f is inert. Within the
// caps f always has finitely many terms, so the composition is a finite sum.
CharSeries plethysm(const CharSeries& f, const CharSeries& g);
SymFn plethysm(const SymFn& f, const SymFn& g);

// Plethystic exponential Exp(f) = sum_n h_n o f, evaluated as the ordinary
// truncated exponential of sum_k psi_k(f)/k. Requires positive filtration:
// the bidegree-(0,0) component of f must vanish.
CharSeries exp_op(const CharSeries& f);
SymFn exp_op(const SymFn& f);

// Inverse of exp_op via Cadogan's formula
//   Log(1+a) = sum_n mu(n)/n log(1 + psi_n(a)),
// the inner log being the ordinary alternating series, finite under the
// caps. Requires the bidegree-(0,0) part of the argument to be exactly 1.
CharSeries log_op(const CharSeries& g);
SymFn log_op(const SymFn& g);

// The complete-homogeneous plethysm family h_l o a for l = 0..l_max,
// via the Newton-style recursion l H_l = sum_{k=1..l} psi_k(a) H_{l-k}.
std::vector<CharSeries> h_plethysm_family(const CharSeries& a, int l_max);

}  // namespace symchar
