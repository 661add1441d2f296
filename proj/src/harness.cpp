#include "slocc/harness.hpp"

#include "slocc/errors.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <thread>

namespace slocc {

uint64_t derive_seed(uint64_t seed, uint64_t index)
{
    // splitmix64 step
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Scalar random_rational(std::mt19937_64& rng, long bound)
{
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    return Scalar::frac(num(rng), den(rng));
}

Scalar random_nonzero(std::mt19937_64& rng, long bound)
{
    for (;;) {
        Scalar s = random_rational(rng, bound);
        if (!s.is_zero())
            return s;
    }
}

CanonicalForm gen_canonical(const GenConfig& cfg)
{
    if (cfg.block_profile.empty())
        throw BadProfile("empty block profile");
    size_t total = 0;
    for (auto& e : cfg.block_profile) {
        if (e.size == 0)
            throw BadProfile("block of size 0");
        total += e.size;
    }
    if (total != cfg.N)
        throw BadProfile("block sizes sum to " + std::to_string(total) + ", expected N = " + std::to_string(cfg.N));
    std::mt19937_64 rng(cfg.seed);
    long b = cfg.coefficient_bound;

    std::vector<std::pair<Scalar, std::vector<size_t>>> groups;
    for (auto& e : cfg.block_profile) {
        Scalar lam = e.lambda ? *e.lambda : random_rational(rng, b);
        auto it = std::find_if(groups.begin(), groups.end(), [&](auto& g) { return g.first == lam; });
        if (it == groups.end())
            groups.push_back({lam, {e.size}});
        else
            it->second.push_back(e.size);
    }
    std::vector<RunData> runs;
    for (auto& [lam, sizes] : groups) {
        std::sort(sizes.rbegin(), sizes.rend());
        size_t n = sizes.size();
        PolyGrid g(n, std::vector<TruncPoly>(n));
        for (size_t k = 0; k < n; ++k)
            for (size_t l = 0; l < n; ++l) {
                g[k][l] = TruncPoly(sizes[l]);
                if (k != l && cfg.decoupled)
                    continue;
                for (size_t c = 0; c < sizes[l]; ++c) {
                    if (sizes[k] < sizes[l] && c < sizes[l] - sizes[k])
                        continue;
                    if (k > l && sizes[k] == sizes[l] && c == 0)
                        continue;
                    g[k][l][c] = random_rational(rng, b);
                }
            }
        runs.push_back({lam, sizes, std::move(g)});
    }
    return normalize_runs(std::move(runs));
}

SymmetryParams gen_params(std::mt19937_64& rng, long bound)
{
    SymmetryParams sp;
    sp.z1 = random_rational(rng, bound);
    sp.z2 = random_rational(rng, bound);
    sp.z3 = random_rational(rng, bound);
    sp.d2 = random_nonzero(rng, bound);
    sp.d3 = random_nonzero(rng, bound);
    return sp;
}

namespace {

Matrix random_invertible(std::mt19937_64& rng, size_t n, long bound)
{
    for (;;) {
        Matrix m(n, n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                m(r, c) = random_rational(rng, bound);
        if (rank(m) == n)
            return m;
    }
}

} // namespace

ILOTriple gen_ilo(const GenConfig& cfg, IloFamily family)
{
    std::mt19937_64 rng(derive_seed(cfg.seed, 0x11));
    long b = cfg.coefficient_bound;
    Matrix t;
    if (family == IloFamily::general) {
        t = random_invertible(rng, cfg.L, b);
    } else if (cfg.L == 3) {
        t = gen_params(rng, b).t();
    } else {
        // U D with U unit upper triangular and D = diag(1, d_2, ...)
        Matrix u = Matrix::identity(cfg.L);
        std::vector<Scalar> d{Scalar(1)};
        for (size_t r = 0; r < cfg.L; ++r)
            for (size_t c = r + 1; c < cfg.L; ++c)
                u(r, c) = random_rational(rng, b);
        for (size_t k = 1; k < cfg.L; ++k)
            d.push_back(random_nonzero(rng, b));
        t = u * Matrix::diag(d);
    }
    Matrix p = random_invertible(rng, cfg.N, b);
    Matrix q = random_invertible(rng, cfg.N, b);
    return {t, p, q};
}

TensorState realize(const CanonicalForm& cf)
{
    return TensorState({Matrix::identity(cf.dim()), cf.assemble_j(), cf.assemble_a()});
}

CanonicalForm oracle_recanonicalize(const CanonicalForm& cf, const ILOTriple& ops)
{
    TensorState s = apply_ilo(realize(cf), ops);
    if (rank(s.gammas[0]) < s.N)
        throw DegenerateParameter("first slot becomes singular");
    // the sweep tries the first slot alone before anything else
    Reduction red = full_rank_reduce_with_ops(s);
    if (!(red.ops.t == Matrix::identity(3)))
        throw InvalidArgument("reduction did not keep the first slot");
    return commuting_pair_canonical(red.state.gammas[1], red.state.gammas[2]).cf;
}

std::string profile_str(const CanonicalForm& cf)
{
    std::string s;
    for (auto& b : cf.spec.blocks) {
        if (!s.empty())
            s += ",";
        s += b.lambda.str() + ":" + std::to_string(b.size);
    }
    if (!cf.decoupled())
        s += " coupled";
    return s;
}

namespace {

struct Outcome {
    Trial trial;
    bool pass = false;
    size_t redraws = 0;
};

// runs fn(index, seed) for every index, across jobs threads; results keep index order
SuiteReport run_trials(const std::string& name, const SuiteOptions& o, size_t default_count,
                       const std::function<Outcome(size_t, uint64_t)>& fn)
{
    auto start = std::chrono::steady_clock::now();
    size_t count = o.count ? o.count : default_count;
    std::vector<Outcome> out(count);
    unsigned jobs = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(count)));
    auto work = [&](unsigned w) {
        for (size_t k = w; k < count; k += jobs) {
            uint64_t seed = derive_seed(o.seed, k);
            try {
                out[k] = fn(k, seed);
            } catch (const std::exception& e) {
                out[k].pass = false;
                out[k].trial.detail = std::string("exception: ") + e.what();
            }
            out[k].trial.seed = seed;
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> ts;
        for (unsigned w = 0; w < jobs; ++w)
            ts.emplace_back(work, w);
        for (auto& t : ts)
            t.join();
    }
    SuiteReport r;
    r.name = name;
    for (auto& oc : out) {
        oc.trial.verdict = oc.pass ? "pass" : "fail";
        (oc.pass ? r.passed : r.failed)++;
        r.redraws += oc.redraws;
        r.trials.push_back(std::move(oc.trial));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// block sizes <= 4 summing to N <= max_n, eigenvalues from a small pool so
// that repeats (derogatory runs) are common
std::vector<ProfileEntry> random_profile(std::mt19937_64& rng, size_t max_n)
{
    size_t n = 1 + rng() % max_n;
    std::vector<Scalar> pool;
    size_t pool_size = 1 + rng() % 3;
    for (size_t k = 0; k < pool_size; ++k)
        pool.push_back(random_rational(rng, 4));
    std::vector<ProfileEntry> prof;
    size_t left = n;
    while (left > 0) {
        size_t s = 1 + rng() % std::min<size_t>(4, left);
        prof.push_back({pool[rng() % pool.size()], s});
        left -= s;
    }
    return prof;
}

GenConfig random_config(std::mt19937_64& rng, uint64_t seed, size_t max_n, long bound, bool decoupled)
{
    GenConfig cfg;
    cfg.seed = seed;
    cfg.block_profile = random_profile(rng, max_n);
    for (auto& e : cfg.block_profile)
        cfg.N += e.size;
    cfg.coefficient_bound = bound;
    cfg.decoupled = decoupled;
    return cfg;
}

CanonicalForm block(const Scalar& lam, std::vector<Scalar> a)
{
    return CanonicalForm::single_block(lam, std::move(a));
}

} // namespace

SuiteReport suite_golden(const SuiteOptions& o)
{
    struct Case {
        std::string name;
        std::function<bool()> check;
    };
    const Scalar h = Scalar::frac(1, 2);
    std::vector<Case> cases{
        {"JA (1,0,2,3) generic z3",
         [] {
             for (const Scalar& z : {Scalar(0), Scalar(1), Scalar::frac(-1, 3), Scalar::frac(5, 7), Scalar(-4)}) {
                 Scalar d = 1 + 2 * z;
                 if (!(apply_T_JA(block(1, {0, 2, 3}), z) == block(1, {0, 2 * d.inv(), 3 * pow(d, -3)})))
                     return false;
             }
             return true;
         }},
        {"JA (1,0,2,3) z3=1", [] { return apply_T_JA(block(1, {0, 2, 3}), 1) == block(1, {0, Scalar::frac(2, 3), Scalar::frac(1, 9)}); }},
        {"EJ (1,1,1,1) z1=1", [h] { return apply_T_EJ(block(1, {1, 1, 1}), 1) == block(h, {h, 1, 8}); }},
        {"EA (1,1,0,1) z2=1", [h] { return apply_T_EA(block(1, {1, 0, 1}), 1) == block(h, {h, 0, 1}); }},
        {"rescale (1,1,1,1) d=(2,3)",
         [] { return apply_rescale(block(1, {1, 1, 1}), 2, 3) == block(2, {3, Scalar::frac(3, 2), Scalar::frac(3, 4)}); }},
        {"Moebius lambda=2 T=[[1,1],[0,1]]", [] { return mobius_2nn(2, 1, 1, 1) == Scalar::frac(2, 3); }},
        {"JA matrices on (1,0,2,3)",
         [] {
             ILOTriple ops{t_ja(1), Matrix::identity(3), Matrix::identity(3)};
             auto cf = block(1, {0, 2, 3});
             return oracle_recanonicalize(cf, ops) == apply_T_JA(cf, 1);
         }},
        {"identity parameters",
         [] {
             auto cf = block(Scalar::frac(3, 2), {1, -2, 5, 7});
             return apply_all(cf, SymmetryParams::identity()) == cf;
         }},
    };
    return run_trials("golden", {o.seed, 1, cases.size()}, cases.size(), [&](size_t k, uint64_t) {
        Outcome oc;
        oc.trial.profile = cases[k].name;
        oc.pass = cases[k].check();
        return oc;
    });
}

SuiteReport suite_closed_forms(const SuiteOptions& o)
{
    return run_trials("closed-forms", o, 50, [](size_t, uint64_t seed) {
        std::mt19937_64 rng(seed);
        Outcome oc;
        for (;;) {
            Scalar lam = random_rational(rng, 9), a0 = random_rational(rng, 9), a1 = random_rational(rng, 9),
                   a2 = random_rational(rng, 9), z = random_nonzero(rng, 9);
            Scalar g = 1 + z * lam, h = 1 + z * a0, k = 1 + z * (a0 - a1 * lam), m = 1 + z * a1;
            if (g.is_zero() || h.is_zero() || k.is_zero() || m.is_zero()) {
                ++oc.redraws;
                continue;
            }
            auto cf = block(lam, {a0, a1, a2});
            oc.trial.profile = "(" + lam.str() + "," + a0.str() + "," + a1.str() + "," + a2.str() + ") z=" + z.str();
            bool ej = apply_T_EJ(cf, z) == block(lam / g, {a0 / g, a1 - a0 * z + a1 * z * lam, a2 * pow(g, 3)});
            bool ea = apply_T_EA(cf, z) == block(lam / h, {a0 / h, a1 / k, a2 * pow(h, 3) / pow(k, 3)});
            bool ja = apply_T_JA(cf, z) == block(lam + z * a0, {a0, a1 / m, a2 / pow(m, 3)});
            oc.pass = ej && ea && ja;
            if (!oc.pass)
                oc.trial.detail = std::string(ej ? "" : "EJ ") + (ea ? "" : "EA ") + (ja ? "" : "JA");
            return oc;
        }
    });
}

SuiteReport suite_mobius(const SuiteOptions& o)
{
    return run_trials("2nn", o, 100, [](size_t, uint64_t seed) {
        std::mt19937_64 rng(seed);
        Outcome oc;
        for (;;) {
            // (E, J) with blocks of size <= 4
            JordanSpec spec;
            size_t nb = 1 + rng() % 3;
            for (size_t k = 0; k < nb; ++k)
                spec.blocks.push_back({random_rational(rng, 5), 1 + rng() % 4});
            Scalar t11 = random_nonzero(rng, 9), t12 = random_rational(rng, 9), t22 = random_nonzero(rng, 9);
            bool bad = false;
            for (auto& b : spec.blocks)
                bad = bad || (t11 + t12 * b.lambda).is_zero();
            if (bad) {
                ++oc.redraws;
                continue;
            }
            size_t n = spec.dim();
            Matrix t{{t11, t12}, {0, t22}};
            Matrix p = random_invertible(rng, n, 3), q = random_invertible(rng, n, 3);
            TensorState s = apply_ilo(TensorState({Matrix::identity(n), assemble_jordan(spec)}), {t, p, q});
            JordanSpec got = jordan_decompose(inverse(s.gammas[0]) * s.gammas[1]).spec;
            std::vector<std::pair<Scalar, size_t>> have, want;
            for (auto& b : got.blocks)
                have.push_back({b.lambda, b.size});
            for (auto& b : spec.blocks)
                want.push_back({mobius_2nn(b.lambda, t11, t12, t22), b.size});
            std::sort(have.begin(), have.end());
            std::sort(want.begin(), want.end());
            oc.pass = have == want;
            for (auto& b : spec.blocks)
                oc.trial.profile += b.lambda.str() + ":" + std::to_string(b.size) + " ";
            oc.trial.detail = "t=(" + t11.str() + "," + t12.str() + "," + t22.str() + ")";
            return oc;
        }
    });
}

SuiteReport suite_oracle(const SuiteOptions& o)
{
    return run_trials("oracle", o, 300, [](size_t k, uint64_t seed) {
        std::mt19937_64 rng(seed);
        Outcome oc;
        for (;;) {
            GenConfig cfg = random_config(rng, rng(), 6, 5, k % 3 == 0);
            CanonicalForm cf = gen_canonical(cfg);
            SymmetryParams sp = gen_params(rng, 3);
            ILOTriple ops = gen_ilo(cfg, IloFamily::general);
            ops.t = sp.t();
            try {
                CanonicalForm got = apply_all(cf, sp);
                CanonicalForm want = oracle_recanonicalize(cf, ops);
                oc.trial.profile = profile_str(cf);
                oc.pass = same_class(got, want, seed);
                return oc;
            } catch (const DegenerateParameter&) {
                ++oc.redraws;
            }
        }
    });
}

SuiteReport suite_orbit(const SuiteOptions& o)
{
    return run_trials("orbit", o, 100, [](size_t, uint64_t seed) {
        std::mt19937_64 rng(seed);
        Outcome oc;
        for (;;) {
            GenConfig cfg = random_config(rng, rng(), 6, 5, true);
            CanonicalForm cf = gen_canonical(cfg);
            SymmetryParams sp = gen_params(rng, 3);
            CanonicalForm img;
            try {
                img = apply_all(cf, sp);
            } catch (const DegenerateParameter&) {
                ++oc.redraws;
                continue;
            }
            oc.trial.profile = profile_str(cf);
            OrbitDecision d = orbit_equivalent(cf, img, seed);
            bool eq = d.verdict == Verdict::Equivalent && apply_params(cf, d.witness) == img;

            // a form with another block-size multiset
            GenConfig other = cfg;
            do {
                other = random_config(rng, rng(), 6, 5, true);
                other.N = cfg.N;
                other.block_profile.clear();
                size_t left = cfg.N;
                while (left > 0) {
                    size_t s = 1 + rng() % std::min<size_t>(4, left);
                    other.block_profile.push_back({std::nullopt, s});
                    left -= s;
                }
            } while (gen_canonical(other).size_multiset() == cf.size_multiset() && cfg.N > 1);
            bool ineq = true;
            if (cfg.N > 1)
                ineq = orbit_equivalent(cf, gen_canonical(other), seed).verdict == Verdict::Inequivalent;
            oc.pass = eq && ineq;
            oc.trial.detail = to_string(d.verdict) + (d.note.empty() ? "" : " (" + d.note + ")");
            return oc;
        }
    });
}

SuiteReport suite_commutant(const SuiteOptions& o)
{
    // every spec with <= 3 blocks of sizes <= 4; eigenvalue sharing by set partitions
    std::vector<JordanSpec> specs;
    const std::vector<std::vector<int>> labelings[3] = {
        {{0}}, {{0, 0}, {0, 1}}, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}}};
    for (size_t nb = 1; nb <= 3; ++nb) {
        std::vector<size_t> sizes(nb, 1);
        for (;;) {
            for (auto& lab : labelings[nb - 1]) {
                JordanSpec s;
                for (size_t k = 0; k < nb; ++k)
                    s.blocks.push_back({Scalar(lab[k]), sizes[k]});
                specs.push_back(s);
            }
            size_t k = 0;
            while (k < nb && sizes[k] == 4)
                sizes[k++] = 1;
            if (k == nb)
                break;
            ++sizes[k];
        }
    }
    return run_trials("commutant", o, specs.size(), [&](size_t k, uint64_t) {
        const JordanSpec& s = specs[k];
        Outcome oc;
        for (auto& b : s.blocks)
            oc.trial.profile += b.lambda.str() + ":" + std::to_string(b.size) + " ";
        size_t expect = 0;
        for (auto& x : s.blocks)
            for (auto& y : s.blocks)
                if (x.lambda == y.lambda)
                    expect += std::min(x.size, y.size);
        Matrix j = assemble_jordan(s);
        size_t n = j.rows();
        auto basis = commutant_basis(s);
        bool ok = basis.size() == expect;
        Matrix vecs(basis.size(), n * n);
        for (size_t b = 0; b < basis.size(); ++b) {
            ok = ok && basis[b] * j == j * basis[b];
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c)
                    vecs(b, r * n + c) = basis[b](r, c);
        }
        ok = ok && rank(vecs) == basis.size();
        // X J - J X = 0 as a linear map on row-major vec(X)
        Matrix op(n * n, n * n);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                for (size_t m = 0; m < n; ++m) {
                    op(r * n + c, r * n + m) += j(m, c);
                    op(r * n + c, m * n + c) -= j(r, m);
                }
        ok = ok && n * n - rank(op) == expect;
        oc.pass = ok;
        return oc;
    });
}

SuiteReport suite_nilpoly(const SuiteOptions& o)
{
    return run_trials("nilpoly", o, 200, [](size_t k, uint64_t seed) {
        std::mt19937_64 rng(seed);
        Outcome oc;
        size_t n = 2 + k % 5;
        TruncPoly f(n);
        for (size_t i = 0; i < n; ++i)
            f[i] = random_rational(rng, 9);
        f[0] = random_nonzero(rng, 9);
        f[1] = random_nonzero(rng, 9);
        TruncPoly x = TruncPoly::affine(n, 0);
        bool ok = mul(f, reciprocal(f)) == TruncPoly::constant(n, 1);
        TruncPoly g = shifted_reversion(f);
        ok = ok && compose_shifted(g, f) == x;
        // the J-slot series of T_EJ: (lambda + x) / (1 + z (lambda + x)) and its reversion
        Scalar lam = random_rational(rng, 9), z = random_nonzero(rng, 9);
        Scalar c = 1 + z * lam;
        if (c.is_zero()) {
            z = z + 1;
            c = 1 + z * lam;
        }
        if (!c.is_zero()) {
            TruncPoly fj = mul(TruncPoly::affine(3, lam), reciprocal(TruncPoly::affine(3, c, z)));
            ok = ok && shifted_reversion(fj) == TruncPoly({Scalar(0), c * c, z * pow(c, 3)});
        }
        oc.trial.profile = "order " + std::to_string(n);
        oc.pass = ok;
        return oc;
    });
}

SuiteReport suite_split(const SuiteOptions& o)
{
    struct Case {
        std::string name;
        bool expect;
        std::function<bool()> eval;
    };
    auto pf_with = [](Matrix beta) {
        PartitionedForm pf;
        pf.m = 2;
        pf.i = 1;
        pf.lambda_prime = Matrix::diag({1, 0});
        pf.beta_part = {std::move(beta)};
        return pf;
    };
    std::vector<Case> cases{
        {"beta nilpotent corner", true, [&] { return beta_canonical_check(pf_with(Matrix{{0, 1}, {0, 0}})); }},
        {"beta diag(0,1)", false, [&] { return beta_canonical_check(pf_with(Matrix::diag({0, 1}))); }},
        {"beta zero", false, [&] { return beta_canonical_check(pf_with(Matrix(2, 2))); }},
        {"split of (diag(1,0), [[0,1],[0,0]])", true,
         [] {
             return beta_canonical_check(nonfull_rank_split(TensorState({Matrix::diag({1, 0}), Matrix{{0, 1}, {0, 0}}})));
         }},
    };
    return run_trials("split", {o.seed, 1, cases.size()}, cases.size(), [&](size_t k, uint64_t) {
        Outcome oc;
        oc.trial.profile = cases[k].name;
        bool got = cases[k].eval();
        oc.pass = got == cases[k].expect;
        oc.trial.detail = got ? "true" : "false";
        return oc;
    });
}

const std::vector<NamedSuite>& all_suites()
{
    static const std::vector<NamedSuite> suites{
        {"golden", suite_golden},   {"closed-forms", suite_closed_forms}, {"2nn", suite_mobius},
        {"oracle", suite_oracle},   {"orbit", suite_orbit},               {"commutant", suite_commutant},
        {"nilpoly", suite_nilpoly}, {"split", suite_split},
    };
    return suites;
}

std::vector<NamedSuite> suites_for(const std::string& profile)
{
    if (profile == "all")
        return all_suites();
    std::vector<NamedSuite> out;
    for (auto& s : all_suites())
        if (s.name == profile)
            out.push_back(s);
    if (out.empty())
        throw InvalidArgument("unknown profile " + profile);
    return out;
}

} // namespace slocc
