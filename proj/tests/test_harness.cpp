#include "doctest.h"
#include "slocc/errors.hpp"
#include "slocc/harness.hpp"

using namespace slocc;

namespace {

GenConfig config(uint64_t seed, std::vector<ProfileEntry> prof)
{
    GenConfig cfg;
    cfg.seed = seed;
    for (auto& e : prof)
        cfg.N += e.size;
    cfg.block_profile = std::move(prof);
    return cfg;
}

// A lies in the span of the commutant basis of J
bool in_commutant(const CanonicalForm& cf)
{
    auto basis = commutant_basis(cf.spec);
    size_t n = cf.dim();
    Matrix vecs(n * n, basis.size());
    for (size_t b = 0; b < basis.size(); ++b)
        for (size_t k = 0; k < n * n; ++k)
            vecs(k, b) = basis[b](k / n, k % n);
    Matrix a = cf.assemble_a();
    Matrix v(n * n, 1);
    for (size_t k = 0; k < n * n; ++k)
        v(k, 0) = a(k / n, k % n);
    return in_span(vecs, v);
}

} // namespace

TEST_CASE("gen_canonical")
{
    auto one = gen_canonical(config(1, {{Scalar(0), 1}}));
    CHECK(one.dim() == 1);
    CHECK(one.spec.blocks[0].lambda == Scalar(0));

    auto a = gen_canonical(config(42, {{Scalar(1), 3}}));
    auto b = gen_canonical(config(42, {{Scalar(1), 3}}));
    CHECK(a == b);
    CHECK(!(a == gen_canonical(config(43, {{Scalar(1), 3}}))));

    auto d = gen_canonical(config(5, {{Scalar(1), 2}, {Scalar(1), 2}}));
    CHECK(d.spec.runs().size() == 1);
    CHECK(!d.decoupled());
    CHECK(in_commutant(d));

    GenConfig bad = config(1, {{Scalar(0), 2}});
    bad.N = 3;
    CHECK_THROWS_AS(gen_canonical(bad), BadProfile);
    CHECK_THROWS_AS(gen_canonical(config(1, {{Scalar(0), 0}})), BadProfile);

    for (uint64_t s = 0; s < 40; ++s) {
        auto cf = gen_canonical(config(s, {{std::nullopt, 3}, {Scalar(2), 2}, {Scalar(2), 1}, {Scalar(2), 1}}));
        CHECK(cf.dim() == 7);
        CHECK(in_commutant(cf));
        // eigenvalues of A stay rational, so the pair can be canonicalized again
        CHECK(same_class(commuting_pair_canonical(cf.assemble_j(), cf.assemble_a()).cf, cf, s));
    }
}

TEST_CASE("gen_ilo")
{
    for (uint64_t s = 0; s < 20; ++s) {
        GenConfig cfg = config(s, {{std::nullopt, 2}, {std::nullopt, 1}});
        auto g = gen_ilo(cfg, IloFamily::general);
        CHECK(rank(g.t) == 3);
        CHECK(rank(g.p) == 3);
        CHECK(rank(g.q) == 3);
        auto u = gen_ilo(cfg, IloFamily::upper_unitriangular_T);
        CHECK(u.t(0, 0) == Scalar(1));
        for (size_t r = 0; r < 3; ++r)
            for (size_t c = 0; c < r; ++c)
                CHECK(u.t(r, c).is_zero());
        CHECK(rank(u.t) == 3);
        auto again = gen_ilo(cfg, IloFamily::general);
        CHECK(again.t == g.t);
        CHECK(again.p == g.p);
    }
    GenConfig four = config(3, {{std::nullopt, 2}});
    four.L = 4;
    auto u4 = gen_ilo(four, IloFamily::upper_unitriangular_T);
    CHECK(u4.t.rows() == 4);
    CHECK(u4.t(0, 0) == Scalar(1));
    CHECK(u4.t(3, 0).is_zero());
}

TEST_CASE("oracle_recanonicalize")
{
    auto cf = CanonicalForm::single_block(1, {0, 2, 3});
    ILOTriple id{Matrix::identity(3), Matrix::identity(3), Matrix::identity(3)};
    CHECK(oracle_recanonicalize(cf, id) == cf);
    CHECK(oracle_recanonicalize(cf, {t_ja(1), Matrix::identity(3), Matrix::identity(3)}) == apply_T_JA(cf, 1));

    // P and Q alone never change the class
    for (uint64_t s = 0; s < 100; ++s) {
        GenConfig cfg = config(s, {{std::nullopt, 1 + s % 3}, {Scalar(1), 1 + s % 2}, {Scalar(1), 1}});
        auto f = gen_canonical(cfg);
        auto ops = gen_ilo(cfg, IloFamily::general);
        ops.t = Matrix::identity(3);
        CHECK(same_class(oracle_recanonicalize(f, ops), f, s));
    }
}

TEST_CASE("suites are reproducible and pass")
{
    for (auto& s : all_suites()) {
        if (s.name == "oracle" || s.name == "commutant")
            continue; // full size runs in the acceptance binary
        SuiteReport a = s.run({9, 1, 0});
        SuiteReport b = s.run({9, 2, 0});
        CHECK_MESSAGE(a.ok(), s.name);
        REQUIRE(a.trials.size() == b.trials.size());
        for (size_t k = 0; k < a.trials.size(); ++k) {
            CHECK(a.trials[k].seed == b.trials[k].seed);
            CHECK(a.trials[k].profile == b.trials[k].profile);
            CHECK(a.trials[k].verdict == b.trials[k].verdict);
        }
    }
    CHECK(suites_for("2nn").size() == 1);
    CHECK(suites_for("all").size() == all_suites().size());
    CHECK_THROWS_AS(suites_for("nope"), InvalidArgument);
}
