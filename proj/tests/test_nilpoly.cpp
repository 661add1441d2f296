#include "oracles.hpp"

#include "slocc/errors.hpp"
#include "slocc/jordan.hpp"
#include "slocc/nilpoly.hpp"

#include <doctest.h>

using namespace slocc;

namespace {
Scalar q(long n, long d = 1) { return Scalar::frac(n, d); }
TruncPoly tp(std::vector<Scalar> c) { return TruncPoly(std::move(c)); }

TruncPoly random_poly(std::mt19937_64& rng, size_t n)
{
    TruncPoly f(n);
    for (size_t k = 0; k < n; ++k)
        f[k] = oracle::small_rational(rng, 9);
    return f;
}
} // namespace

TEST_CASE("mul examples")
{
    CHECK(mul(tp({1, 1, 0}), tp({1, -1, 0})) == tp({1, 0, -1}));
    CHECK(mul(tp({0, 1}), tp({0, 1})) == tp({0, 0}));
    CHECK(mul(tp({1, 1, 1}), tp({1, 1, 0})) == tp({1, 2, 2}));
    CHECK_THROWS_AS(mul(tp({1, 1}), tp({1, 1, 1})), OrderMismatch);
}

TEST_CASE("reciprocal examples")
{
    CHECK(reciprocal(tp({1, 1, 0})) == tp({1, -1, 1}));
    CHECK(reciprocal(tp({2, 0})) == tp({q(1, 2), 0}));
    CHECK(reciprocal(tp({1, 2, 1})) == tp({1, -2, 3}));
    CHECK_THROWS_AS(reciprocal(tp({0, 1})), NotInvertible);

    // (1 + z lambda) + z x has reciprocal (1/(1+z lambda)) sum (-z/(1+z lambda))^n x^n
    Scalar z = q(3, 7), l = q(-2, 5);
    Scalar c = Scalar(1) + z * l;
    TruncPoly r = reciprocal(tp({c, z, 0, 0, 0}));
    for (size_t n = 0; n < 5; ++n)
        CHECK(r[n] == pow(-z / c, static_cast<long>(n)) / c);
}

TEST_CASE("compose examples")
{
    std::mt19937_64 rng(1);
    TruncPoly g = random_poly(rng, 4);
    CHECK(compose(tp({0, 1, 0, 0}), g) == g);
    CHECK(compose(tp({0, 0, 1}), tp({1, 1, 0})) == tp({1, 2, 1}));
    Scalar l = q(5, 3);
    CHECK(compose(tp({1, 1, 0}), tp({l, 1, 0})) == tp({Scalar(1) + l, 1, 0}));
}

TEST_CASE("shifted_reversion examples")
{
    CHECK(shifted_reversion(tp({0, 1, 0})) == tp({0, 1, 0}));
    CHECK(shifted_reversion(tp({0, 1, 1})) == tp({0, 1, -1}));
    CHECK_THROWS_AS(shifted_reversion(tp({1, 0, 1})), NotReversible);

    // lambda/c + x/c^2 - z x^2/c^3 with c = 1 + z lambda
    Scalar z = q(-4, 9), l = q(7, 2);
    Scalar c = Scalar(1) + z * l;
    TruncPoly f = tp({l / c, Scalar(1) / (c * c), -z / (c * c * c)});
    CHECK(shifted_reversion(f) == tp({0, c * c, z * c * c * c}));
}

TEST_CASE("reciprocal and reversion round trips")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        size_t n = 2 + t % 5;
        TruncPoly f = random_poly(rng, n);
        if (f[0].is_zero())
            f[0] = 1;
        if (f[1].is_zero())
            f[1] = -1;
        CHECK(mul(f, reciprocal(f)) == TruncPoly::constant(n, 1));
        TruncPoly x = TruncPoly::affine(n, 0);
        CHECK(compose_shifted(shifted_reversion(f), f) == x);
    }
}

TEST_CASE("eval_at_jordan")
{
    Scalar l = q(2, 3);
    CHECK(eval_at_jordan(tp({l, 1, 0, 0}), 0) == Matrix::jordan_block(4, l));
    CHECK(eval_at_jordan(tp({1, 0, 0}), l) == Matrix::identity(3));
    Matrix t = eval_at_jordan(tp({2, 3, 5}), 0);
    CHECK(t == Matrix{{2, 3, 5}, {0, 2, 3}, {0, 0, 2}});
    // f(J(l)) computed as a matrix polynomial
    TruncPoly f = tp({1, -2, 3, 4});
    Matrix j = Matrix::jordan_block(4, l);
    Matrix direct = Matrix::identity(4) * f[0] + j * f[1] + j * j * f[2] + j * j * j * f[3];
    CHECK(eval_at_jordan(f, l) == direct);

    std::mt19937_64 rng(2);
    for (int k = 0; k < 30; ++k) {
        size_t n = 1 + k % 5;
        TruncPoly a = random_poly(rng, n), b = random_poly(rng, n);
        CHECK(eval_at_jordan(mul(a, b), 0) == eval_at_jordan(a, 0) * eval_at_jordan(b, 0));
    }
}

TEST_CASE("toeplitz conversions")
{
    CHECK(toeplitz_to_poly(Matrix::identity(2)) == tp({1, 0}));
    CHECK(poly_to_toeplitz(tp({1, 0})) == Matrix::identity(2));
    CHECK(toeplitz_to_poly(Matrix{{2, 3, 0}, {0, 2, 3}, {0, 0, 2}}) == tp({2, 3, 0}));
    CHECK(toeplitz_to_poly(Matrix::jordan_block(3, 0)) == tp({0, 1, 0}));
    CHECK_THROWS_AS(toeplitz_to_poly(Matrix{{1, 2}, {3, 1}}), NotToeplitz);
    CHECK_THROWS_AS(toeplitz_to_poly(Matrix{{1, 2}, {0, 3}}), NotToeplitz);
    std::mt19937_64 rng(4);
    for (int k = 0; k < 20; ++k) {
        TruncPoly f = random_poly(rng, 1 + k % 5);
        CHECK(toeplitz_to_poly(poly_to_toeplitz(f)) == f);
    }
}

TEST_CASE("polynomial grid to commutant")
{
    CHECK(poly_matrix_to_commutant({{tp({3, 4})}}, {2}) == Matrix{{3, 4}, {0, 3}});

    // sizes (3,2): the 3x2 block uses both coefficients, the 2x3 block needs a vanishing x^0 term
    Scalar a110 = 1, a111 = 2, a112 = 3, a120 = 4, a121 = 5, a210 = 6, a211 = 7, a220 = 8, a221 = 9;
    PolyGrid g{{tp({a110, a111, a112}), tp({a120, a121})}, {tp({0, a210, a211}), tp({a220, a221})}};
    Matrix m = poly_matrix_to_commutant(g, {3, 2});
    Matrix expect{{a110, a111, a112, a120, a121},
                  {0, a110, a111, 0, a120},
                  {0, 0, a110, 0, 0},
                  {0, a210, a211, a220, a221},
                  {0, 0, a210, 0, a220}};
    CHECK(m == expect);
    JordanSpec spec{{{0, 3}, {0, 2}}};
    Matrix j = assemble_jordan(spec);
    CHECK(m * j == j * m);
    CHECK(commutant_to_poly_matrix(m, {3, 2}) == g);

    PolyGrid bad = g;
    bad[1][0][0] = 1;
    CHECK_THROWS_AS(poly_matrix_to_commutant(bad, {3, 2}), PatternViolation);

    // (2,2) grid of constants is c_kl I_2 in each block, and solves [M, J] = 0
    PolyGrid c{{tp({1, 0}), tp({2, 0})}, {tp({3, 0}), tp({4, 0})}};
    Matrix mc = poly_matrix_to_commutant(c, {2, 2});
    Matrix j22 = assemble_jordan(JordanSpec{{{5, 2}, {5, 2}}});
    CHECK(mc * j22 == j22 * mc);
    CHECK(mc == Matrix{{1, 0, 2, 0}, {0, 1, 0, 2}, {3, 0, 4, 0}, {0, 3, 0, 4}});
    CHECK_THROWS_AS(commutant_to_poly_matrix(Matrix::jordan_block(4, 1), {2, 2}), PatternViolation);
}

TEST_CASE("random grids commute with the Jordan matrix")
{
    std::mt19937_64 rng(9);
    std::vector<std::vector<size_t>> shapes = {{1, 1}, {3, 1}, {2, 3}, {4, 2, 2}, {1, 3, 2}};
    for (auto& sizes : shapes) {
        PolyGrid g(sizes.size(), std::vector<TruncPoly>(sizes.size()));
        JordanSpec spec;
        for (size_t k = 0; k < sizes.size(); ++k) {
            spec.blocks.push_back({q(1, 2), sizes[k]});
            for (size_t l = 0; l < sizes.size(); ++l) {
                g[k][l] = random_poly(rng, sizes[l]);
                for (size_t d = 0; sizes[l] > sizes[k] && d < sizes[l] - sizes[k]; ++d)
                    g[k][l][d] = 0;
            }
        }
        Matrix m = poly_matrix_to_commutant(g, sizes);
        Matrix j = assemble_jordan(spec);
        CHECK(m * j == j * m);
        CHECK(commutant_to_poly_matrix(m, sizes) == g);
    }
}
