#include "oracles.hpp"

#include "slocc/errors.hpp"
#include "slocc/jordan.hpp"
#include "slocc/poly.hpp"

#include <doctest.h>

using namespace slocc;

namespace {
Scalar q(long n, long d = 1) { return Scalar::frac(n, d); }
} // namespace

TEST_CASE("scalar arithmetic and parsing")
{
    Scalar a = Scalar::parse("1/2+3/4i");
    CHECK(a.re() == mpq_class(1, 2));
    CHECK(a.im() == mpq_class(3, 4));
    CHECK(Scalar::parse("-i") == Scalar(0, -1));
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("2/4") == q(1, 2));
    CHECK(Scalar::parse("1-i") == Scalar(1, -1));
    CHECK(Scalar::parse("-3/2i") == Scalar(0, mpq_class(-3, 2)));
    CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/x"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(""), ParseError);
    CHECK((Scalar::i() * Scalar::i()) == Scalar(-1));
    CHECK((Scalar(1, 1) / Scalar(1, -1)) == Scalar::i());
    CHECK(a * a.inv() == Scalar(1));
    for (auto s : {"0", "-7/3", "i", "-i", "1/2-3i", "5+i"})
        CHECK(Scalar::parse(Scalar::parse(s).str()) == Scalar::parse(s));
    CHECK(q(1) < Scalar(1, 1));
    CHECK(Scalar(0, 5) < q(1));
}

TEST_CASE("rank examples")
{
    CHECK(rank(Matrix::identity(3)) == 3);
    CHECK(rank(Matrix(2, 2)) == 0);
    CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("inverse examples")
{
    CHECK(inverse(Matrix::identity(3)) == Matrix::identity(3));
    CHECK(inverse(Matrix{{2, 0}, {0, 4}}) == Matrix{{q(1, 2), 0}, {0, q(1, 4)}});
    Matrix m{{1, 1}, {0, 1}};
    CHECK(inverse(m) == Matrix{{1, -1}, {0, 1}});
    CHECK(m * inverse(m) == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), SingularMatrix);
}

TEST_CASE("char_poly examples")
{
    CHECK(char_poly(Matrix::diag({1, 2})) == std::vector<Scalar>{2, -3, 1});
    CHECK(char_poly(Matrix(2, 2)) == std::vector<Scalar>{0, 0, 1});
    Scalar l = q(7, 3);
    CHECK(char_poly(Matrix::jordan_block(2, l)) == std::vector<Scalar>{l * l, -l - l, 1});
}

TEST_CASE("rank, inverse, char_poly against cofactor oracles up to 4x4")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        size_t n = 1 + t % 4;
        Matrix m = oracle::random_matrix(rng, n, n, 3);
        if (t % 5 == 0 && n > 1) // force dependencies
            for (size_t c = 0; c < n; ++c)
                m(n - 1, c) = m(0, c) * Scalar(2) - m(1 % n, c);
        CHECK(rank(m) == oracle::minor_rank(m));
        CHECK(determinant(m) == oracle::cofactor_det(m));
        CHECK(char_poly(m) == oracle::interpolated_char_poly(m));
        if (!oracle::cofactor_det(m).is_zero())
            CHECK(inverse(m) == oracle::adjugate_inverse(m));
        Matrix r = oracle::random_matrix(rng, n, n + 1, 2);
        CHECK(rank(r) == oracle::minor_rank(r));
    }
}

TEST_CASE("nullspace and solve")
{
    Matrix m{{1, 2, 3}, {2, 4, 6}};
    Matrix k = nullspace(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
    auto x = solve(m, Matrix{{1}, {2}});
    REQUIRE(x);
    CHECK(m * *x == Matrix{{1}, {2}});
    CHECK(!solve(m, Matrix{{1}, {3}}));
}

TEST_CASE("eigenvalues in field")
{
    CHECK(eigenvalues_in_field(Matrix::diag({1, 2, 2})) == std::vector<Scalar>{1, 2, 2});
    CHECK(eigenvalues_in_field(Matrix{{0, 1}, {1, 0}}) == std::vector<Scalar>{-1, 1});
    CHECK(eigenvalues_in_field(Matrix{{0, -1}, {1, 0}}) == std::vector<Scalar>{Scalar(0, -1), Scalar(0, 1)});
    CHECK_THROWS_AS(eigenvalues_in_field(Matrix{{0, 2}, {1, 0}}), NotInField);
    // a hint does not have to be a root
    CHECK(eigenvalues_in_field(Matrix::diag({q(1, 3), q(-5, 7)}), {q(9)}) ==
          std::vector<Scalar>{q(-5, 7), q(1, 3)});
}

TEST_CASE("roots with rational and Gaussian-rational denominators")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        std::vector<Scalar> roots;
        Poly p = Poly::constant(1);
        size_t d = 1 + t % 6;
        for (size_t k = 0; k < d; ++k) {
            Scalar r(oracle::small_rational(rng, 9).re(), t % 3 == 0 ? oracle::small_rational(rng, 5).re() : mpq_class(0));
            if (k > 0 && t % 4 == 0)
                r = roots[0]; // repeated roots
            roots.push_back(r);
            p = p * Poly::linear_root(r);
        }
        std::sort(roots.begin(), roots.end());
        CHECK(field_roots(p) == roots);
    }
    // (x^2 - 2)(x - 1/3): one root in field, residual reported
    Poly p = Poly({-2, 0, 1}) * Poly::linear_root(q(1, 3));
    auto [found, rest] = field_roots_partial(p);
    CHECK(found == std::vector<Scalar>{q(1, 3)});
    CHECK(rest == Poly({-2, 0, 1}));
}

TEST_CASE("jordan_decompose examples")
{
    auto d = jordan_decompose(Matrix::diag({3, 3}));
    CHECK(d.spec.blocks == std::vector<JordanBlock>{{3, 1}, {3, 1}});
    CHECK(d.s == Matrix::identity(2));

    d = jordan_decompose(Matrix{{1, 1}, {0, 1}});
    CHECK(d.spec.blocks == std::vector<JordanBlock>{{1, 2}});

    Matrix m{{5, 4}, {-4, -3}};
    d = jordan_decompose(m);
    CHECK(d.spec.blocks == std::vector<JordanBlock>{{1, 2}});
    CHECK(inverse(d.s) * m * d.s == assemble_jordan(d.spec));
}

TEST_CASE("jordan_decompose reassembles planted spectra")
{
    std::mt19937_64 rng(3);
    std::vector<std::vector<JordanBlock>> specs = {
        {{1, 3}},
        {{0, 2}, {0, 1}},
        {{q(-1, 2), 1}, {2, 2}, {2, 2}},
        {{Scalar(0, -1), 1}, {Scalar(0, 1), 2}},
        {{1, 2}, {1, 2}, {1, 1}, {3, 1}},
        {{0, 4}, {0, 1}, {5, 1}},
    };
    for (auto& blocks : specs)
        for (int t = 0; t < 5; ++t) {
            JordanSpec spec{blocks};
            Matrix j = assemble_jordan(spec);
            Matrix p = oracle::random_invertible(rng, j.rows(), 3);
            Matrix m = p * j * inverse(p);
            auto d = jordan_decompose(m);
            CHECK(d.spec == spec);
            CHECK(d.s * assemble_jordan(d.spec) * inverse(d.s) == m);
        }
}

TEST_CASE("already-Jordan input gives identity witness")
{
    JordanSpec spec{{{0, 3}, {0, 2}, {1, 2}, {1, 2}, {1, 1}}};
    auto d = jordan_decompose(assemble_jordan(spec));
    CHECK(d.spec == spec);
    CHECK(d.s == Matrix::identity(spec.dim()));
}

TEST_CASE("commutant basis examples")
{
    Scalar l = q(2, 5);
    auto b1 = commutant_basis(JordanSpec{{{l, 1}}});
    REQUIRE(b1.size() == 1);
    CHECK(b1[0] == Matrix::identity(1));

    auto b3 = commutant_basis(JordanSpec{{{l, 3}}});
    REQUIRE(b3.size() == 3);
    Matrix n = Matrix::jordan_block(3, 0);
    CHECK(b3[0] == Matrix::identity(3));
    CHECK(b3[1] == n);
    CHECK(b3[2] == n * n);

    JordanSpec s32{{{l, 3}, {l, 2}}};
    auto b32 = commutant_basis(s32);
    CHECK(b32.size() == 9);
    Matrix j = assemble_jordan(s32);
    for (auto& b : b32)
        CHECK(b * j == j * b);
    CHECK(oracle::kronecker_commutant_dim(j) == 9);
}
