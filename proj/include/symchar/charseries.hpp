#pragma once

#include <vector>

#include "symchar/symfunc.hpp"

namespace symchar {

// Truncated power series in t with symmetric-function coefficients: the
// bigraded working ring modulo (t^{T+1}, symmetric degree > S). Caps travel
// with values; binary operations take the componentwise minimum so nothing
// beyond what was computed is ever trusted.
class CharSeries {
public:
    CharSeries(int sym_cap, int t_cap);

    static CharSeries zero(int sym_cap, int t_cap) { return {sym_cap, t_cap}; }
    static CharSeries one(int sym_cap, int t_cap);
    // f * t^k
    static CharSeries monomial(const SymFn& f, int k, int t_cap);
    // Plain rational t-series (symmetric cap 0).
    static CharSeries scalar_series(const std::vector<Rational>& coeffs);

    int t_cap() const { return t_cap_; }
    int sym_cap() const { return sym_cap_; }

    // The coefficient of t^j; j out of [0, T] is rejected.
    const SymFn& at(int j) const;
    void set(int j, SymFn f);
    void add_at(int j, const SymFn& f);

    bool is_zero() const;

    CharSeries truncated(int sym_cap, int t_cap) const;

    CharSeries& operator+=(const CharSeries& other);
    friend CharSeries operator+(CharSeries a, const CharSeries& b) { return a += b; }
    CharSeries operator-() const;
    friend CharSeries operator-(CharSeries a, const CharSeries& b) { return a += -b; }
    friend CharSeries operator*(const CharSeries& a, const CharSeries& b);
    friend CharSeries operator*(const CharSeries& a, const Rational& c);
    friend CharSeries operator*(const Rational& c, const CharSeries& a) { return a * c; }

    bool operator==(const CharSeries& other) const;

    // Multiply by t^k (coefficients shifted up, overflow truncated).
    CharSeries shifted_by_t_power(int k) const;
    // t -> -t: the coefficient of t^j picks up (-1)^j.
    CharSeries substitute_neg_t() const;
    // Multiply by 1 + t^2 + t^4 + ... truncated at the t cap.
    CharSeries geometric_factor() const;

    std::string to_string() const;

private:
    std::vector<SymFn> coeffs_;  // index = t-degree, size t_cap_+1
    int sym_cap_;
    int t_cap_;
};

}  // namespace symchar
