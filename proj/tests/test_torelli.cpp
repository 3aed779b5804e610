#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "symchar/cache.hpp"
#include "symchar/render.hpp"
#include "symchar/torelli.hpp"

using namespace symchar;

namespace {

Partition P(std::vector<int> parts) {
    return Partition(std::move(parts));
}

SpDecomposition dec_of(std::vector<std::pair<std::vector<int>, long>> terms) {
    SpDecomposition out;
    for (auto& [parts, mult] : terms)
        out.add(P(parts), Rational(mult));
    return out;
}

}  // namespace

TEST_CASE("generating character coefficients") {
    CharSeries v = ch_v(12, 4);
    CHECK(v.at(0).is_zero());
    CHECK(v.at(1) == h_generator(3, 12));
    CHECK(v.at(2) == SymFn::one(12) + h_generator(2, 12) + h_generator(4, 12));
    CHECK(v.at(3) == h_generator(1, 12) + h_generator(3, 12) + h_generator(5, 12));
    CHECK(epsilon(v.at(0)) == 0);  // required for exp_op
}

TEST_CASE("gamma blocks") {
    // gamma_(1) = t^3 h_1/(1-t^2)
    CharSeries g1 = gamma_lambda(P({1}), 6, 6);
    CHECK(g1 == CharSeries::monomial(h_generator(1, 6), 3, 6).geometric_factor());
    // gamma_(3) = t h_3/(1-t^2)
    CharSeries g3 = gamma_lambda(P({3}), 6, 6);
    CHECK(g3 == CharSeries::monomial(h_generator(3, 6), 1, 6).geometric_factor());
    CHECK(gamma_delta(P({1})) == 3);
    CHECK(gamma_delta(P({2})) == 2);
    CHECK(gamma_delta(P({3})) == 1);
    CHECK(gamma_delta(P({5, 3, 1})) == 7);
}

TEST_CASE("exp_ch_v method agreement") {
    RunOptions opts;
    opts.use_cache = false;
    CharSeries generic = exp_ch_v(9, 3, ExpMethod::Generic, opts);
    CHECK(generic.at(1) == h_generator(3, 9));
    CHECK(generic == exp_ch_v(9, 3, ExpMethod::Gamma, opts));
    CHECK(exp_ch_v(12, 4, ExpMethod::Generic, opts) == exp_ch_v(12, 4, ExpMethod::Gamma, opts));
}

TEST_CASE("quadratic algebra table at degree 0") {
    CharacterTable table = char_A(0);
    CHECK(table.degree(0) == dec_of({{{}, 1}}));
    CHECK(table.max_degree() == 0);
}

TEST_CASE("quadratic algebra table through degree 2") {
    CharacterTable table = char_A(2);
    CHECK(table.degree(0) == dec_of({{{}, 1}}));
    CHECK(table.degree(1) == dec_of({{{1, 1, 1}, 1}}));
    CHECK(table.degree(2) == dec_of({{{}, 1},
                                     {{1, 1}, 1},
                                     {{1, 1, 1, 1}, 1},
                                     {{1, 1, 1, 1, 1, 1}, 1},
                                     {{2, 2, 1, 1}, 1}}));
}

TEST_CASE("one-marked-point variant through degree 2") {
    // Degree 1 generators are <1^3> + <1>.
    CharacterTable table = char_A1(2);
    CHECK(table.degree(0) == dec_of({{{}, 1}}));
    CHECK(table.degree(1) == dec_of({{{1, 1, 1}, 1}, {{1}, 1}}));
    CHECK(table.degree(2) == dec_of({{{}, 1},
                                     {{1, 1}, 2},
                                     {{2, 1, 1}, 1},
                                     {{1, 1, 1, 1}, 2},
                                     {{2, 2, 1, 1}, 1},
                                     {{1, 1, 1, 1, 1, 1}, 1}}));
    // Stable H^1 of the once-marked mapping class group with third tensor
    // power coefficients is 4-dimensional: pair the degree-1 generators
    // against the decomposition of the third tensor power.
    SymFn h1_cubed = h_generator(1, 3) * h_generator(1, 3) * h_generator(1, 3);
    SpDecomposition tensor_cubed = to_symplectic_basis(h1_cubed);
    Rational dim = 0;
    for (const auto& [lambda, mult] : table.degree(1).terms())
        dim += mult * tensor_cubed.multiplicity(lambda);
    CHECK(dim == 4);
}

TEST_CASE("torelli table through degree 4") {
    CharacterTable table = char_torelli(4);
    CHECK(table.degree(1) == dec_of({{{1, 1, 1}, 1}}));
    CHECK(table.degree(2) == dec_of({{{}, 1}, {{2, 2}, 1}}));
    CHECK(table.degree(3) == dec_of({{{3, 1, 1}, 1}}));
    CHECK(table.degree(4) == dec_of({{{2}, 1},
                                     {{3, 1}, 1},
                                     {{4, 2}, 1},
                                     {{2, 2, 2}, 1},
                                     {{3, 1, 1, 1}, 1}}));
}

TEST_CASE("torelli degree support bound") {
    CharacterTable table = char_torelli(5);
    for (int n = 1; n <= 5; ++n) {
        CHECK(table.degree(n).max_weight() <= n + 2);
        CHECK(!table.degree(n).empty());
    }
}

TEST_CASE("quadratic algebra degree support bound") {
    CharacterTable table = char_A(3);
    for (int n = 1; n <= 3; ++n) {
        CHECK(table.degree(n).max_weight() == 3 * n);
    }
}

TEST_CASE("koszul roundtrip") {
    // With P(t) = t^2 - Log(cch_t), Exp(P - t^2) * cch_t = 1 by construction;
    // this pins the Exp/Log wiring end to end.
    int n_max = 3, S = n_max + 2;
    RunOptions opts;
    CharSeries e = exp_ch_v(3 * n_max, n_max, ExpMethod::Generic, opts);
    CharSeries heat = apply_heat(HeatKind::DPrime, -1, e, 1);
    CharSeries cch(S, n_max);
    for (int j = 0; j <= n_max; ++j)
        cch.set(j, omega_tilde(heat.at(j)).truncated(S));
    CharSeries log_part = log_op(cch);
    CHECK(exp_op(-log_part) * cch == CharSeries::one(S, n_max));
}

TEST_CASE("gamma_infinity counts partitions into even parts") {
    CharSeries g = gamma_infinity(8);
    std::vector<long> expected = {1, 0, 1, 0, 2, 0, 3, 0, 5};
    for (int j = 0; j <= 8; ++j)
        CHECK(epsilon(g.at(j)) == expected[j]);
    // Independent route: the product over n of 1/(1-t^{2n}).
    CharSeries product = CharSeries::one(0, 8);
    for (int n = 1; 2 * n <= 8; ++n) {
        CharSeries factor(0, 8);
        for (int j = 0; 2 * n * j <= 8; ++j)
            factor.add_at(2 * n * j, SymFn::one(0));
        product = product * factor;
    }
    CHECK(g == product);
}

TEST_CASE("poincare series") {
    RunOptions opts;
    CHECK(poincare_series(Partition(), 4, opts) == gamma_infinity(4));
    CharSeries cube = poincare_series(P({1, 1, 1}), 2, opts);
    CHECK(epsilon(cube.at(1)) == 1);
    CHECK(epsilon(poincare_series(P({3}), 2, opts).at(1)) == 0);
    CHECK_THROWS_AS(poincare_series(P({7}), 2, opts), CapError);
}

TEST_CASE("stable moduli series") {
    int S = 4, T = 4;
    CharSeries m = stable_moduli_series(ModuliKind::MarkedPoints, S, T);
    SymFn sum_h(S);
    for (int n = 0; n <= S; ++n)
        sum_h += h_generator(n, S);
    CHECK(m.at(0) == sum_h);
    CharSeries c = stable_moduli_series(ModuliKind::UniversalCurve, S, T);
    CHECK(c.at(0) == sum_h);
    CharSeries m0 = stable_moduli_series(ModuliKind::MarkedPoints, 0, 8);
    CHECK(m0 == gamma_infinity(8));
}

TEST_CASE("universal-curve series is the marked-points series composed with the "
          "fibre alphabet") {
    int S = 4, T = 6;
    CharSeries m = stable_moduli_series(ModuliKind::MarkedPoints, S, T);
    CharSeries c = stable_moduli_series(ModuliKind::UniversalCurve, S, T);
    CharSeries fibre(S, T);
    for (int n = 1; n <= S && 2 * n - 2 <= T; ++n)
        fibre.add_at(2 * n - 2, h_generator(n, S));
    CHECK(c == plethysm(m, fibre));
}

TEST_CASE("poincare series coefficients are nonnegative integers") {
    RunOptions opts;
    for (const auto& lambda :
         {Partition(), P({1, 1, 1}), P({2, 1}), P({3}), P({2, 2})}) {
        CharSeries series = poincare_series(lambda, 6, opts);
        for (int j = 0; j <= 6; ++j) {
            Rational c = epsilon(series.at(j));
            CHECK(is_integer(c));
            CHECK(sgn(c) >= 0);
        }
    }
}

TEST_CASE("wedge2 decompositions") {
    SpDecomposition generator_block = dec_of({{{1, 1, 1}, 1}});
    CHECK(wedge2_sp(generator_block) == dec_of({{{1, 1, 1, 1, 1, 1}, 1},
                                                {{1, 1, 1, 1}, 1},
                                                {{1, 1}, 1},
                                                {{}, 1},
                                                {{2, 2, 1, 1}, 1},
                                                {{2, 2}, 1}}));
    SpDecomposition with_h = dec_of({{{1, 1, 1}, 1}, {{1}, 1}});
    CHECK(wedge2_sp(with_h) == dec_of({{{1, 1, 1, 1, 1, 1}, 1},
                                       {{1, 1, 1, 1}, 2},
                                       {{1, 1}, 3},
                                       {{}, 2},
                                       {{2, 2, 1, 1}, 1},
                                       {{2, 2}, 1},
                                       {{2, 1, 1}, 1}}));
    CHECK(wedge2_sp(dec_of({{{1}, 1}})) == dec_of({{{1, 1}, 1}, {{}, 1}}));
}

TEST_CASE("disk cache round-trips exactly") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "symchar-cache-test";
    fs::remove_all(dir);

    CharSeries series(6, 3);
    SymFn f(6);
    f.add_term(P({3, 2, 1}), make_rational(Integer("123456789012345678901234567"),
                                           Integer("987654321098765432109876543")));
    f.add_term(P({1}), Rational(-7, 3));
    series.set(2, f);
    series.add_at(0, SymFn::one(6));

    CacheKey key{"unit_test", 6, 3, "generic", "fp"};
    cache_store(dir.string(), key, series);
    auto loaded = cache_load(dir.string(), key);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == series);

    // Corrupt the file: it must be reported and ignored.
    {
        std::ofstream out(dir / cache_file_name(key));
        out << "{ not json";
    }
    CHECK_FALSE(cache_load(dir.string(), key).has_value());

    // Header mismatch is also ignored.
    CacheKey other = key;
    other.fingerprint = "other";
    cache_store(dir.string(), other, series);
    fs::rename(dir / cache_file_name(other), dir / cache_file_name(key));
    CHECK_FALSE(cache_load(dir.string(), key).has_value());

    fs::remove_all(dir);
}

TEST_CASE("exp_ch_v uses the disk cache") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "symchar-cache-test2";
    fs::remove_all(dir);
    RunOptions opts;
    opts.cache_dir = dir.string();
    opts.use_cache = true;
    CharSeries first = exp_ch_v(6, 2, ExpMethod::Generic, opts);
    CacheKey key{"exp_ch_v", 6, 2, "generic", chv_fingerprint()};
    CHECK(fs::exists(dir / cache_file_name(key)));
    CHECK(exp_ch_v(6, 2, ExpMethod::Generic, opts) == first);
    fs::remove_all(dir);
}
