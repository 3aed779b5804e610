#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace symchar {

// Exact arithmetic throughout: multiplicities must come out as exact
// integers, and denominators grow past machine range well before the
// degrees this engine targets.
using Rational = mpq_class;
using Integer = mpz_class;

class Error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A generator index or partition weight exceeded the symmetric-degree cap.
class CapError : public Error {
    using Error::Error;
};

// Plethystic Exp/Log applied to a series with a nonzero constant bidegree.
class ConvergenceError : public Error {
    using Error::Error;
};

class ParseError : public Error {
    using Error::Error;
};

inline bool is_zero(const Rational& q) {
    return sgn(q) == 0;
}

// mpq_class(num, den) does not canonicalize; always build fractions here.
inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

}  // namespace symchar
