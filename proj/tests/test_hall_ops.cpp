#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symchar/hall_ops.hpp"
#include "symchar/lambda_ring.hpp"

using namespace symchar;

namespace {

Partition P(std::vector<int> parts) {
    return Partition(std::move(parts));
}

SymFn random_symfn(std::mt19937& rng, int max_degree, int cap) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), pick(0, 2);
    SymFn f(cap);
    for (const auto& mu : partitions_up_to(max_degree)) {
        if (pick(rng) != 0)
            continue;
        int n = num(rng);
        if (n)
            f.add_term(mu, make_rational(n, den(rng)));
    }
    return f;
}

}  // namespace

TEST_CASE("hall pairing") {
    CHECK(hall_pairing(p_generator(2, 4), p_generator(2, 4)) == 2);
    CHECK(hall_pairing(schur(P({2, 1}), 4), schur(P({2, 1}), 4)) == 1);
    CHECK(hall_pairing(h_generator(2, 4), e_generator(2, 4)) == 0);
    // Schur orthonormality through degree 6.
    auto all = partitions_up_to(6);
    for (const auto& a : all)
        for (const auto& b : all) {
            if (a.weight() != b.weight())
                continue;
            CHECK(hall_pairing(schur(a, 6), schur(b, 6)) == (a == b ? 1 : 0));
        }
}

TEST_CASE("perp operators") {
    CHECK(perp(p_generator(1, 4), h_generator(3, 4)) == h_generator(2, 4));
    CHECK(perp(p_generator(2, 6), p_generator(2, 6) * p_generator(2, 6)) ==
          p_generator(2, 6) * Rational(4));
    CHECK(perp(p_generator(3, 4), SymFn::one(4)).is_zero());
}

TEST_CASE("perp is adjoint to multiplication") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 4; ++trial) {
        SymFn f = random_symfn(rng, 3, 6);
        SymFn h = random_symfn(rng, 3, 6);
        SymFn g = random_symfn(rng, 6, 6);
        CHECK(hall_pairing(f * h, g) == hall_pairing(h, perp(f, g)));
    }
}

TEST_CASE("heat kernel examples") {
    CHECK(apply_heat(HeatKind::D, -1, schur(P({1, 1}), 4)) ==
          schur(P({1, 1}), 4) - SymFn::one(4));
    CHECK(apply_heat(HeatKind::D, -1, schur(P({1, 1, 1}), 4)) ==
          schur(P({1, 1, 1}), 4) - schur(P({1}), 4));
    CHECK(apply_heat(HeatKind::D, -1, schur(P({1}), 4)) == schur(P({1}), 4));
    CHECK(apply_heat(HeatKind::DPrime, -1, h_generator(2, 4)) ==
          h_generator(2, 4) - SymFn::one(4));
    CHECK_THROWS_AS(apply_heat(HeatKind::D, 2, SymFn::one(4)), Error);
}

TEST_CASE("heat kernels are mutually inverse") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 4; ++trial) {
        SymFn f = random_symfn(rng, 10, 10);
        CHECK(apply_heat(HeatKind::D, -1, apply_heat(HeatKind::D, +1, f)) == f);
        CHECK(apply_heat(HeatKind::DPrime, -1, apply_heat(HeatKind::DPrime, +1, f)) == f);
    }
}

TEST_CASE("intertwining with omega_tilde") {
    // exp(-D) omega_tilde = omega_tilde exp(-D') on every p_lambda, degree <= 10
    for (const auto& mu : partitions_up_to(10)) {
        SymFn f(10);
        f.add_term(mu, 1);
        CHECK(apply_heat(HeatKind::D, -1, omega_tilde(f)) ==
              omega_tilde(apply_heat(HeatKind::DPrime, -1, f)));
    }
}

TEST_CASE("Exp(e_2)-perp equals exp(D)") {
    SymFn exp_e2 = exp_op(e_generator(2, 16));
    std::mt19937 rng(13);
    for (int trial = 0; trial < 4; ++trial) {
        SymFn g = random_symfn(rng, 8, 8);
        CHECK(perp(exp_e2, g) == apply_heat(HeatKind::D, +1, g));
    }
}

TEST_CASE("symplectic Jacobi-Trudi agrees with the heat kernel") {
    for (const auto& lambda : partitions_up_to(8))
        CHECK(sp_schur(lambda, 8) == apply_heat(HeatKind::D, -1, schur(lambda, 8)));
}

TEST_CASE("to_symplectic_basis") {
    SymFn h_squared = p_generator(1, 4) * p_generator(1, 4);
    SpDecomposition dec = to_symplectic_basis(h_squared);
    SpDecomposition expected;
    expected.add(P({2}), 1);
    expected.add(P({1, 1}), 1);
    expected.add(Partition(), 1);
    CHECK(dec == expected);

    SpDecomposition dec2 = to_symplectic_basis(schur(P({1, 1}), 4));
    SpDecomposition expected2;
    expected2.add(P({1, 1}), 1);
    expected2.add(Partition(), 1);
    CHECK(dec2 == expected2);

    // roundtrip on a pure symplectic Schur function
    SpDecomposition single;
    single.add(P({2, 2}), 1);
    CHECK(to_symplectic_basis(from_symplectic_basis(single, 4)) == single);
}

TEST_CASE("from_symplectic_basis") {
    SpDecomposition empty_part;
    empty_part.add(Partition(), 1);
    CHECK(from_symplectic_basis(empty_part, 4) == SymFn::one(4));

    SpDecomposition cube;
    cube.add(P({1, 1, 1}), 1);
    CHECK(from_symplectic_basis(cube, 4) == schur(P({1, 1, 1}), 4) - schur(P({1}), 4));

    SpDecomposition too_big;
    too_big.add(P({3, 3}), 1);
    CHECK_THROWS_AS(from_symplectic_basis(too_big, 4), CapError);

    std::mt19937 rng(14);
    for (int trial = 0; trial < 4; ++trial) {
        SymFn f = random_symfn(rng, 8, 8);
        CHECK(from_symplectic_basis(to_symplectic_basis(f), 8) == f);
    }
}

TEST_CASE("tensor power characters have nonnegative integer multiplicities") {
    SymFn h1 = h_generator(1, 6);
    SymFn power = SymFn::one(6);
    for (int n = 1; n <= 6; ++n) {
        power = power * h1;
        SpDecomposition dec = to_symplectic_basis(power);
        CHECK(dec.is_integral());
        CHECK(dec.is_nonnegative());
    }
}

TEST_CASE("heat over series coefficients matches per-coefficient application") {
    CharSeries s(6, 3);
    s.add_at(0, h_generator(4, 6));
    s.add_at(2, e_generator(3, 6) * p_generator(2, 6));
    for (int threads : {1, 0}) {
        CharSeries out = apply_heat(HeatKind::DPrime, -1, s, threads);
        for (int j = 0; j <= 3; ++j)
            CHECK(out.at(j) == apply_heat(HeatKind::DPrime, -1, s.at(j)));
    }
}
