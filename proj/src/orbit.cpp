#include "slocc/errors.hpp"
#include "slocc/mpoly.hpp"
#include "slocc/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace slocc {

namespace {

// unknowns of T = [[1, u0, u1], [0, u2, u3], [0, 0, u4]]
constexpr size_t NV = 5;
const Scalar identity_value[NV] = {0, 0, 1, 0, 1};
// t22 and t33 vanish only for singular T
bool must_be_nonzero(size_t v)
{
    return v == 2 || v == 4;
}

struct Block {
    Scalar lambda;
    TruncPoly f;
};

std::vector<Block> blocks_of(const CanonicalForm& cf)
{
    std::vector<Block> out;
    for (auto& run : cf.run_data())
        for (size_t k = 0; k < run.sizes.size(); ++k)
            out.push_back({run.lambda, run.grid[k][k]});
    return out;
}

using Series = std::vector<MPoly>;

Series series_mul(const Series& a, const Series& b)
{
    size_t n = a.size();
    Series c(n, MPoly(NV));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].is_zero())
            continue;
        for (size_t j = 0; i + j < n; ++j)
            if (!b[j].is_zero())
                c[i + j] += a[i] * b[j];
    }
    return c;
}

Series series_pow(const Series& a, unsigned e)
{
    Series r(a.size(), MPoly(NV));
    r[0] = MPoly::constant(NV, 1);
    for (unsigned k = 0; k < e; ++k)
        r = series_mul(r, a);
    return r;
}

MPoly u(size_t v)
{
    return MPoly::var(NV, v);
}

MPoly c(const Scalar& s)
{
    return MPoly::constant(NV, s);
}

// generalized binomial coefficient (1 - m choose j)
Scalar binom_1m(long m, long j)
{
    Scalar r(1);
    for (long i = 0; i < j; ++i)
        r = r * Scalar(1 - m - i) / Scalar(i + 1);
    return r;
}

// Conditions on T for the block (lambda, f) to be sent to (lambda2, f2): with
// e, j, a the new slot series and w = j - lambda2 e, a/e = f2(w/e) mod x^n;
// coefficient k is multiplied through by e0^(k-1)
std::vector<MPoly> block_equations(const Block& b1, const Block& b2)
{
    size_t n = b1.f.order();
    const TruncPoly& f = b1.f;
    const TruncPoly& g = b2.f;
    Series e(n, MPoly(NV)), j(n, MPoly(NV)), a(n, MPoly(NV));
    for (size_t k = 0; k < n; ++k) {
        e[k] = u(1) * f[k];
        j[k] = u(3) * f[k];
        a[k] = u(4) * f[k];
    }
    e[0] += c(1) + u(0) * b1.lambda;
    j[0] += u(2) * b1.lambda;
    if (n > 1) {
        e[1] += u(0);
        j[1] += u(2);
    }
    Series w(n, MPoly(NV));
    for (size_t k = 0; k < n; ++k)
        w[k] = j[k] - e[k] * b2.lambda;
    Series et = e;
    et[0] = MPoly(NV);

    std::vector<MPoly> eqs{w[0], a[0] - e[0] * g[0]};
    std::vector<Series> wp(n + 1), ep(n + 1);
    for (size_t k = 0; k <= n; ++k) {
        wp[k] = series_pow(w, k);
        ep[k] = series_pow(et, k);
    }
    std::vector<MPoly> e0p(n + 1);
    e0p[0] = c(1);
    for (size_t k = 1; k <= n; ++k)
        e0p[k] = e0p[k - 1] * e[0];
    for (size_t k = 1; k < n; ++k) {
        MPoly q = e0p[k - 1] * (a[k] - e[k] * g[0] - w[k] * g[1]);
        for (size_t m = 2; m <= k; ++m) {
            if (g[m].is_zero())
                continue;
            MPoly s(NV);
            for (size_t jj = 0; jj + m <= k; ++jj) {
                Series prod = series_mul(wp[m], ep[jj]);
                if (prod[k].is_zero())
                    continue;
                s += e0p[k - m - jj] * prod[k] * binom_1m(long(m), long(jj));
            }
            q -= s * g[m];
        }
        eqs.push_back(q);
    }
    return eqs;
}

// last nonzero pseudo-remainder free of v; it vanishes wherever f and g both do
MPoly eliminate_var(MPoly f, MPoly g, size_t v, size_t max_terms)
{
    if (f.degree_in(v) < g.degree_in(v))
        std::swap(f, g);
    while (g.degree_in(v) > 0) {
        while (!f.is_zero() && f.degree_in(v) >= g.degree_in(v)) {
            auto fc = f.coeffs_in(v), gc = g.coeffs_in(v);
            unsigned shift = f.degree_in(v) - g.degree_in(v);
            f = f * gc.back() - g * fc.back() * pow(u(v), shift);
            if (f.terms().size() > max_terms)
                return MPoly(NV);
        }
        if (f.is_zero())
            return f; // common factor
        std::swap(f, g);
    }
    return g;
}

struct Elim {
    size_t v;
    MPoly num, den; // v = num / den
};

// Finds points of a polynomial system and hands them to accept().
// complete stays true only if every branch was decided exactly, so that an
// empty search proves the system has no admissible solution.
class Solver {
public:
    std::function<bool(const std::vector<Scalar>&)> accept;
    size_t budget = 4000;
    bool complete = true;
    bool found = false;

    void run(std::vector<MPoly> eqs) { step(std::move(eqs), {}); }

private:
    size_t nodes_ = 0;

    void step(std::vector<MPoly> eqs, std::vector<Elim> stack)
    {
        if (found)
            return;
        if (++nodes_ > budget) {
            complete = false;
            return;
        }
        std::vector<MPoly> live;
        for (auto& q : eqs) {
            if (q.is_zero())
                continue;
            if (q.is_constant())
                return;
            if (std::find(live.begin(), live.end(), q) == live.end())
                live.push_back(std::move(q));
        }
        if (live.empty()) {
            leaf(stack);
            return;
        }
        std::sort(live.begin(), live.end(), [](const MPoly& x, const MPoly& y) { return x.terms().size() < y.terms().size(); });

        // linear in some variable with constant coefficient
        for (size_t i = 0; i < live.size(); ++i)
            for (size_t v = 0; v < NV; ++v) {
                if (live[i].degree_in(v) != 1)
                    continue;
                auto cs = live[i].coeffs_in(v);
                if (!cs[1].is_constant())
                    continue;
                eliminate(live, i, v, cs[0] * Scalar(-1), cs[1], stack);
                return;
            }

        // a univariate equation
        for (size_t i = 0; i < live.size(); ++i) {
            if (live[i].used_count() != 1)
                continue;
            auto us = live[i].used();
            size_t v = std::find(us.begin(), us.end(), true) - us.begin();
            Poly p = live[i].univariate(v);
            for (auto& q : live)
                if (q.used_count() == 1 && q.used()[v])
                    p = gcd(p, q.univariate(v));
            if (p.degree() < 1)
                return;
            auto [roots, rest] = field_roots_partial(squarefree_part(p));
            if (rest.degree() > 0)
                complete = false;
            for (auto& r : roots) {
                if (r.is_zero() && must_be_nonzero(v))
                    continue;
                std::vector<MPoly> next;
                for (auto& q : live)
                    next.push_back(q.substitute(v, r));
                auto st = stack;
                st.push_back({v, c(r), c(1)});
                step(std::move(next), std::move(st));
                if (found)
                    return;
            }
            return;
        }

        // linear with a non-constant coefficient: split on whether it vanishes
        size_t bi = live.size(), bv = 0, best = SIZE_MAX;
        for (size_t i = 0; i < live.size(); ++i)
            for (size_t v = 0; v < NV; ++v)
                if (live[i].degree_in(v) == 1) {
                    size_t cost = live[i].coeffs_in(v)[1].terms().size();
                    if (cost < best) {
                        best = cost;
                        bi = i;
                        bv = v;
                    }
                }
        if (bi < live.size()) {
            auto cs = live[bi].coeffs_in(bv);
            eliminate(live, bi, bv, cs[0] * Scalar(-1), cs[1], stack);
            if (found)
                return;
            std::vector<MPoly> next = live;
            next[bi] = cs[1];
            next.push_back(cs[0]);
            step(std::move(next), std::move(stack));
            return;
        }

        // add an equation with one variable eliminated
        std::optional<MPoly> best_r;
        for (size_t i = 0; i < live.size(); ++i)
            for (size_t k = i + 1; k < live.size(); ++k)
                for (size_t v = 0; v < NV; ++v) {
                    if (!live[i].degree_in(v) || !live[k].degree_in(v))
                        continue;
                    MPoly r = eliminate_var(live[i], live[k], v, 400);
                    if (r.is_zero())
                        continue;
                    if (!best_r || r.used_count() < best_r->used_count() ||
                        (r.used_count() == best_r->used_count() && r.terms().size() < best_r->terms().size()))
                        best_r = std::move(r);
                }
        if (best_r && std::find(live.begin(), live.end(), *best_r) == live.end()) {
            live.push_back(std::move(*best_r));
            step(std::move(live), std::move(stack));
            return;
        }

        // nonlinear in everything: try a few values of one variable
        complete = false;
        auto us = live[0].used();
        size_t v = std::find(us.begin(), us.end(), true) - us.begin();
        for (const Scalar& val : {identity_value[v], Scalar(1), Scalar(-1), Scalar(2)}) {
            std::vector<MPoly> next;
            for (auto& q : live)
                next.push_back(q.substitute(v, val));
            auto st = stack;
            st.push_back({v, c(val), c(1)});
            step(std::move(next), std::move(st));
            if (found)
                return;
        }
    }

    void eliminate(const std::vector<MPoly>& live, size_t i, size_t v, const MPoly& num, const MPoly& den,
                   std::vector<Elim> stack)
    {
        if (num.is_zero() && must_be_nonzero(v))
            return;
        std::vector<MPoly> next;
        for (size_t k = 0; k < live.size(); ++k)
            if (k != i)
                next.push_back(live[k].degree_in(v) ? live[k].substitute(v, num, den) : live[k]);
        if (den.is_constant()) {
            Scalar inv = den.constant_term().inv();
            stack.push_back({v, num * inv, c(1)});
        } else {
            stack.push_back({v, num, den});
        }
        step(std::move(next), std::move(stack));
    }

    // remaining variables are unconstrained
    void leaf(const std::vector<Elim>& stack)
    {
        std::vector<bool> bound(NV, false);
        for (auto& el : stack)
            bound[el.v] = true;
        bool any_free = std::find(bound.begin(), bound.end(), false) != bound.end();
        static const Scalar alt[] = {Scalar(2), Scalar(-1), Scalar(3), Scalar::frac(1, 2), Scalar(-2)};
        size_t attempts = any_free ? 1 + std::size(alt) : 1;
        for (size_t t = 0; t < attempts; ++t) {
            std::vector<Scalar> pt(NV);
            for (size_t v = 0; v < NV; ++v)
                if (!bound[v])
                    pt[v] = t == 0 ? identity_value[v] : alt[(t - 1 + v) % std::size(alt)];
            bool ok = true;
            for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                Scalar d = it->den.eval(pt);
                if (d.is_zero()) {
                    ok = false;
                    break;
                }
                pt[it->v] = it->num.eval(pt) / d;
                if (pt[it->v].is_zero() && must_be_nonzero(it->v)) {
                    ok = false;
                    break;
                }
            }
            if (ok && accept(pt)) {
                found = true;
                return;
            }
        }
        // a generic point of a positive-dimensional family may still work
        if (any_free)
            complete = false;
    }
};

Matrix t_of(const std::vector<Scalar>& p)
{
    return Matrix{{1, p[0], p[1]}, {0, p[2], p[3]}, {0, 0, p[4]}};
}

bool same_block(const Block& x, const Block& y)
{
    return x.lambda == y.lambda && x.f == y.f;
}

} // namespace

OrbitDecision orbit_equivalent(const CanonicalForm& cf1, const CanonicalForm& cf2, uint64_t seed)
{
    OrbitDecision d;
    if (cf1.dim() != cf2.dim()) {
        d.verdict = Verdict::Inequivalent;
        d.note = "different dimension";
        return d;
    }
    auto b1 = blocks_of(cf1), b2 = blocks_of(cf2);
    if (same_class(cf1, cf2, seed)) {
        d.verdict = Verdict::Equivalent;
        for (size_t k = 0; k < b1.size(); ++k)
            d.permutation.push_back(k);
        return d;
    }
    if (!cf1.decoupled() || !cf2.decoupled()) {
        d.note = "coupled derogatory run; witness search not attempted";
        return d;
    }
    if (cf1.size_multiset() != cf2.size_multiset()) {
        d.verdict = Verdict::Inequivalent;
        d.note = "block sizes differ";
        return d;
    }

    bool degenerate_seen = false;
    SymmetryParams witness;
    auto accept = [&](const std::vector<Scalar>& p) {
        try {
            SymmetryParams sp = SymmetryParams::from_t(t_of(p));
            if (!same_class(apply_params(cf1, sp), cf2, seed))
                return false;
            witness = sp;
            return true;
        } catch (const DegenerateParameter&) {
            degenerate_seen = true;
        } catch (const ZeroScale&) {
            degenerate_seen = true;
        }
        return false;
    };

    // single families first: T_JA, T_EA, T_EJ and the rescale
    const std::vector<std::vector<std::pair<size_t, long>>> families{
        {{0, 0}, {1, 0}, {2, 1}, {4, 1}},
        {{0, 0}, {2, 1}, {3, 0}, {4, 1}},
        {{1, 0}, {2, 1}, {3, 0}, {4, 1}},
        {{0, 0}, {1, 0}, {3, 0}},
    };
    auto solve_full = [&](const std::vector<MPoly>& eqs) {
        for (auto& fam : families) {
            Solver s;
            s.accept = accept;
            s.budget = 500;
            auto sys = eqs;
            for (auto [v, val] : fam)
                sys.push_back(u(v) - c(val));
            s.run(std::move(sys));
            if (s.found)
                return std::make_pair(true, true);
        }
        Solver s;
        s.accept = accept;
        s.run(eqs);
        return std::make_pair(s.found, s.complete);
    };

    // block matchings by depth-first search; a partial matching whose
    // equations have no solution at all is cut off
    const size_t max_matchings = 120;
    size_t tried = 0;
    bool complete = true, found = false;
    std::vector<size_t> cur;
    std::vector<bool> used(b2.size(), false);
    std::function<void(const std::vector<MPoly>&)> dfs = [&](const std::vector<MPoly>& eqs) {
        if (found)
            return;
        size_t k = cur.size();
        if (k == b1.size()) {
            if (tried++ == max_matchings) {
                complete = false;
                return;
            }
            auto [ok, comp] = solve_full(eqs);
            if (ok) {
                found = true;
                d.permutation = cur;
            }
            complete = complete && comp;
            return;
        }
        for (size_t l = 0; l < b2.size() && !found; ++l) {
            if (used[l] || b2[l].f.order() != b1[k].f.order())
                continue;
            bool repeat = false;
            for (size_t m = 0; m < l; ++m)
                repeat = repeat || (!used[m] && same_block(b2[m], b2[l]));
            if (repeat)
                continue;
            auto next = eqs;
            for (auto& q : block_equations(b1[k], b2[l]))
                next.push_back(std::move(q));
            if (k + 1 < b1.size()) {
                Solver probe;
                probe.accept = [](const std::vector<Scalar>&) { return true; };
                probe.budget = 300;
                probe.run(next);
                if (!probe.found && probe.complete)
                    continue;
            }
            used[l] = true;
            cur.push_back(l);
            dfs(next);
            cur.pop_back();
            used[l] = false;
        }
    };
    dfs({});
    if (found) {
        d.verdict = Verdict::Equivalent;
        d.witness = witness;
        return d;
    }
    if (complete && !degenerate_seen) {
        d.verdict = Verdict::Inequivalent;
        d.note = "witness equations infeasible for every block matching";
    } else {
        d.note = degenerate_seen ? "only degenerate parameter values solve the witness equations" : "search incomplete";
    }
    return d;
}

} // namespace slocc
