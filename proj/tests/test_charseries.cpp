#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symchar/charseries.hpp"

using namespace symchar;

namespace {

CharSeries t_times_h(int n, int j, int S, int T) {
    return CharSeries::monomial(h_generator(n, S), j, T);
}

}  // namespace

TEST_CASE("series arithmetic") {
    int S = 4, T = 2;
    CharSeries a = CharSeries::one(S, T) + t_times_h(1, 1, S, T);
    CharSeries b = CharSeries::one(S, T) - t_times_h(1, 1, S, T);
    CharSeries prod = a * b;
    CHECK(prod.at(0) == SymFn::one(S));
    CHECK(prod.at(1).is_zero());
    CHECK(prod.at(2) == -(h_generator(1, S) * h_generator(1, S)));
}

TEST_CASE("shift") {
    CharSeries s = t_times_h(2, 0, 4, 4).shifted_by_t_power(3);
    CHECK(s.at(3) == h_generator(2, 4));
    CHECK(s.at(0).is_zero());
    // shifting beyond the cap truncates silently
    CHECK(s.shifted_by_t_power(2).is_zero());
}

TEST_CASE("geometric series identity") {
    int T = 6;
    CharSeries geom = CharSeries::one(0, T).geometric_factor();
    for (int j = 0; j <= T; ++j)
        CHECK(epsilon(geom.at(j)) == (j % 2 == 0 ? 1 : 0));
    // (sum t^{2j}) * (1 - t^2) == 1 for even caps
    CharSeries one_minus_t2 = CharSeries::one(0, T);
    one_minus_t2.add_at(2, SymFn::constant(-1, 0));
    CHECK(geom * one_minus_t2 == CharSeries::one(0, T));
    CHECK(one_minus_t2.geometric_factor() == CharSeries::one(0, T));
}

TEST_CASE("substitute_neg_t") {
    int S = 4, T = 3;
    CharSeries s = t_times_h(1, 1, S, T) + t_times_h(2, 2, S, T);
    CharSeries flipped = s.substitute_neg_t();
    CHECK(flipped.at(1) == -h_generator(1, S));
    CHECK(flipped.at(2) == h_generator(2, S));
    CHECK(flipped.substitute_neg_t() == s);
    // ring automorphism: (ab)(-t) = a(-t) b(-t)
    CharSeries a = CharSeries::one(S, T) + t_times_h(1, 1, S, T);
    CharSeries b = t_times_h(2, 1, S, T) + t_times_h(1, 2, S, T);
    CHECK((a * b).substitute_neg_t() == a.substitute_neg_t() * b.substitute_neg_t());
}

TEST_CASE("coefficient access range") {
    CharSeries s = t_times_h(3, 1, 4, 2);
    CHECK(s.at(1) == h_generator(3, 4));
    CHECK(s.at(0).is_zero());
    CHECK_THROWS_AS(s.at(3), Error);
    CHECK_THROWS_AS(s.at(-1), Error);
}

TEST_CASE("truncation is a ring congruence") {
    int S = 6, T = 4, Sp = 3, Tp = 2;
    CharSeries a = t_times_h(1, 1, S, T) + t_times_h(2, 0, S, T) + t_times_h(3, 2, S, T);
    CharSeries b = t_times_h(2, 2, S, T) + t_times_h(1, 0, S, T) + CharSeries::one(S, T);
    CHECK((a * b).truncated(Sp, Tp) == a.truncated(Sp, Tp) * b.truncated(Sp, Tp));
    CHECK((a + b).truncated(Sp, Tp) == a.truncated(Sp, Tp) + b.truncated(Sp, Tp));
    // mixed-cap operands adopt the componentwise minimum
    CHECK((a.truncated(Sp, T) * b).sym_cap() == Sp);
    CHECK((a * b.truncated(S, Tp)).t_cap() == Tp);
}
