#include "slocc/canon.hpp"

#include "slocc/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace slocc {

TensorState::TensorState(std::vector<Matrix> g) : gammas(std::move(g))
{
    L = gammas.size();
    if (L == 0)
        throw DimensionMismatch("empty tensor state");
    N = gammas[0].rows();
    for (auto& m : gammas)
        if (m.rows() != N || m.cols() != N)
            throw DimensionMismatch("slots must all be N x N");
}

TensorState apply_ilo(const TensorState& psi, const ILOTriple& ops)
{
    if (ops.t.rows() != psi.L || ops.t.cols() != psi.L || ops.p.rows() != psi.N || ops.p.cols() != psi.N ||
        ops.q.rows() != psi.N || ops.q.cols() != psi.N)
        throw DimensionMismatch("ILO triple does not match the state");
    std::vector<Matrix> pg;
    for (auto& g : psi.gammas)
        pg.push_back(ops.p * g * ops.q);
    std::vector<Matrix> out;
    for (size_t i = 0; i < psi.L; ++i) {
        Matrix s(psi.N, psi.N);
        for (size_t j = 0; j < psi.L; ++j)
            if (!ops.t(i, j).is_zero())
                s += pg[j] * ops.t(i, j);
        out.push_back(std::move(s));
    }
    return TensorState(std::move(out));
}

Matrix combination(const TensorState& psi, const std::vector<Scalar>& t)
{
    Matrix s(psi.N, psi.N);
    for (size_t j = 0; j < psi.L; ++j)
        if (!t[j].is_zero())
            s += psi.gammas[j] * t[j];
    return s;
}

namespace {

// tuples over {1,-1,2,-2,0}, by total weight, then slot by slot in that value order
std::vector<std::vector<int>> sweep_tuples(size_t len)
{
    static const int values[] = {1, -1, 2, -2, 0};
    int max_weight = len <= 5 ? static_cast<int>(2 * len) : 3;
    std::vector<std::vector<int>> keys;
    std::vector<int> cur(len, 0);
    // enumerate index tuples into values[]
    std::function<void(size_t, int)> rec = [&](size_t pos, int weight) {
        if (pos == len) {
            if (weight > 0)
                keys.push_back(cur);
            return;
        }
        for (int v = 0; v < 5; ++v) {
            int w = weight + std::abs(values[v]);
            if (w > max_weight)
                continue;
            cur[pos] = v;
            rec(pos + 1, w);
        }
    };
    rec(0, 0);
    auto weight = [&](const std::vector<int>& k) {
        int w = 0;
        for (int v : k)
            w += std::abs(values[v]);
        return w;
    };
    std::stable_sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
        int wa = weight(a), wb = weight(b);
        if (wa != wb)
            return wa < wb;
        return a < b;
    });
    for (auto& k : keys)
        for (auto& v : k)
            v = values[v];
    return keys;
}

} // namespace

static MaxRank search_rank(size_t len, size_t full, uint64_t seed, const std::function<size_t(const std::vector<Scalar>&)>& rank_of)
{
    MaxRank best;
    auto consider = [&](std::vector<Scalar> t) {
        ++best.samples;
        size_t r = rank_of(t);
        if (best.t.empty() || r > best.r) {
            best.r = r;
            best.t = std::move(t);
        }
        return best.r == full;
    };
    for (auto& tup : sweep_tuples(len)) {
        std::vector<Scalar> t;
        for (int v : tup)
            t.push_back(Scalar(v));
        if (consider(std::move(t))) {
            best.certified = true;
            return best;
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-1000000, 1000000);
    for (int k = 0; k < 64; ++k) {
        std::vector<Scalar> t;
        for (size_t j = 0; j < len; ++j)
            t.push_back(Scalar(d(rng)));
        if (consider(std::move(t))) {
            best.certified = true;
            return best;
        }
    }
    return best;
}

MaxRank max_rank_combination(const TensorState& psi, uint64_t seed)
{
    return search_rank(psi.L, psi.N, seed, [&](const std::vector<Scalar>& t) { return rank(combination(psi, t)); });
}

MaxRank max_rank_of_pencil(const Matrix& base, const std::vector<Matrix>& others, uint64_t seed)
{
    size_t full = std::min(base.rows(), base.cols());
    if (others.empty())
        return MaxRank{{}, rank(base), rank(base) == full, 1};
    return search_rank(others.size(), full, seed, [&](const std::vector<Scalar>& a) {
        Matrix s = base;
        for (size_t j = 0; j < others.size(); ++j)
            if (!a[j].is_zero())
                s += others[j] * a[j];
        return rank(s);
    });
}

// T with first row t and unit rows for every other slot except the first nonzero one
static Matrix completion_of_row(const std::vector<Scalar>& t)
{
    size_t l = t.size();
    size_t k = 0;
    while (k < l && t[k].is_zero())
        ++k;
    if (k == l)
        throw InvalidArgument("zero combination row");
    Matrix m(l, l);
    for (size_t j = 0; j < l; ++j)
        m(0, j) = t[j];
    size_t row = 1;
    for (size_t j = 0; j < l; ++j)
        if (j != k)
            m(row++, j) = 1;
    return m;
}

Reduction full_rank_reduce_with_ops(const TensorState& psi, uint64_t seed)
{
    MaxRank mr = max_rank_combination(psi, seed);
    if (mr.r < psi.N)
        throw NotFullRank("maximal rank found " + std::to_string(mr.r) + " < N = " + std::to_string(psi.N) +
                          " after " + std::to_string(mr.samples) + " samples");
    Matrix t = completion_of_row(mr.t);
    TensorState s = apply_ilo(psi, {t, Matrix::identity(psi.N), Matrix::identity(psi.N)});
    Matrix p = inverse(s.gammas[0]);
    ILOTriple ops{t, p, Matrix::identity(psi.N)};
    return {apply_ilo(psi, ops), ops, mr};
}

TensorState full_rank_reduce(const TensorState& psi, uint64_t seed)
{
    return full_rank_reduce_with_ops(psi, seed).state;
}

RankNormalForm rank_normal_form(const Matrix& m)
{
    size_t rows = m.rows(), cols = m.cols();
    Rref e = rref(m.hcat(Matrix::identity(rows)));
    size_t r = 0;
    while (r < e.pivots.size() && e.pivots[r] < cols)
        ++r;
    Matrix p = e.r.block(0, cols, rows, rows);
    Matrix red = e.r.block(0, 0, rows, cols); // = p * m
    // permute pivot columns to the front, then clear the rest of the pivot rows
    std::vector<size_t> order(e.pivots.begin(), e.pivots.begin() + r);
    for (size_t c = 0; c < cols; ++c)
        if (std::find(order.begin(), order.end(), c) == order.end())
            order.push_back(c);
    Matrix perm(cols, cols);
    for (size_t k = 0; k < cols; ++k)
        perm(order[k], k) = 1;
    Matrix rp = red * perm;
    Matrix clear = Matrix::identity(cols);
    for (size_t i = 0; i < r; ++i)
        for (size_t c = r; c < cols; ++c)
            clear(i, c) = -rp(i, c);
    return {p, perm * clear, r};
}

Reduction reduce_to_lambda(const TensorState& psi, uint64_t seed)
{
    MaxRank mr = max_rank_combination(psi, seed);
    Matrix t = completion_of_row(mr.t);
    TensorState s = apply_ilo(psi, {t, Matrix::identity(psi.N), Matrix::identity(psi.N)});
    RankNormalForm rn = rank_normal_form(s.gammas[0]);
    ILOTriple ops{t, rn.p, rn.q};
    return {apply_ilo(psi, ops), ops, mr};
}

TensorState eigen_shift(const TensorState& psi, const std::vector<Scalar>& hints)
{
    if (!(psi.gammas[0] == Matrix::identity(psi.N)))
        throw InvalidArgument("eigen_shift needs the identity in the first slot");
    TensorState out = psi;
    for (size_t i = 1; i < psi.L; ++i) {
        auto eig = eigenvalues_in_field(psi.gammas[i], hints);
        out.gammas[i] = psi.gammas[i] - Matrix::identity(psi.N) * eig.front();
    }
    return out;
}

Matrix CanonicalForm::assemble_j() const
{
    return assemble_jordan(spec);
}

std::vector<RunData> CanonicalForm::run_data() const
{
    std::vector<RunData> out;
    auto rs = spec.runs();
    for (size_t k = 0; k < rs.size(); ++k) {
        RunData d{spec.blocks[rs[k].first].lambda, {}, runs.at(k)};
        for (size_t b = 0; b < rs[k].count; ++b)
            d.sizes.push_back(spec.blocks[rs[k].first + b].size);
        out.push_back(std::move(d));
    }
    return out;
}

Matrix CanonicalForm::assemble_a() const
{
    std::vector<Matrix> blocks;
    for (auto& r : run_data())
        blocks.push_back(poly_matrix_to_commutant(r.grid, r.sizes));
    return block_diag(blocks);
}

bool CanonicalForm::decoupled() const
{
    for (auto& g : runs)
        for (size_t k = 0; k < g.size(); ++k)
            for (size_t l = 0; l < g.size(); ++l)
                if (k != l && !g[k][l].is_zero())
                    return false;
    return true;
}

std::vector<size_t> CanonicalForm::size_multiset() const
{
    std::vector<size_t> s;
    for (auto& b : spec.blocks)
        s.push_back(b.size);
    std::sort(s.begin(), s.end());
    return s;
}

CanonicalForm CanonicalForm::single_block(const Scalar& lambda, const std::vector<Scalar>& a)
{
    return CanonicalForm{JordanSpec{{{lambda, a.size()}}}, {PolyGrid{{TruncPoly(a)}}}};
}

CanonicalForm normalize_runs(std::vector<RunData> pieces)
{
    std::vector<RunData> merged;
    for (auto& p : pieces) {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const RunData& m) { return m.lambda == p.lambda; });
        if (it == merged.end()) {
            merged.push_back(std::move(p));
            continue;
        }
        size_t a = it->sizes.size(), b = p.sizes.size();
        std::vector<size_t> sizes = it->sizes;
        sizes.insert(sizes.end(), p.sizes.begin(), p.sizes.end());
        PolyGrid g(a + b, std::vector<TruncPoly>(a + b));
        for (size_t k = 0; k < a + b; ++k)
            for (size_t l = 0; l < a + b; ++l) {
                if (k < a && l < a)
                    g[k][l] = it->grid[k][l];
                else if (k >= a && l >= a)
                    g[k][l] = p.grid[k - a][l - a];
                else
                    g[k][l] = TruncPoly(sizes[l]);
            }
        it->sizes = std::move(sizes);
        it->grid = std::move(g);
    }
    for (auto& r : merged) {
        std::vector<size_t> perm(r.sizes.size());
        std::iota(perm.begin(), perm.end(), 0);
        // equal sizes ordered by their diagonal entries
        std::stable_sort(perm.begin(), perm.end(), [&](size_t x, size_t y) {
            if (r.sizes[x] != r.sizes[y])
                return r.sizes[x] > r.sizes[y];
            auto& cx = r.grid[x][x].coeffs();
            auto& cy = r.grid[y][y].coeffs();
            return std::lexicographical_compare(cx.begin(), cx.end(), cy.begin(), cy.end());
        });
        PolyGrid g(perm.size(), std::vector<TruncPoly>(perm.size()));
        std::vector<size_t> sizes;
        for (size_t k = 0; k < perm.size(); ++k) {
            sizes.push_back(r.sizes[perm[k]]);
            for (size_t l = 0; l < perm.size(); ++l)
                g[k][l] = r.grid[perm[k]][perm[l]];
        }
        r.sizes = std::move(sizes);
        r.grid = std::move(g);
    }
    std::stable_sort(merged.begin(), merged.end(), [](const RunData& x, const RunData& y) { return x.lambda < y.lambda; });
    CanonicalForm cf;
    for (auto& r : merged) {
        for (size_t s : r.sizes)
            cf.spec.blocks.push_back({r.lambda, s});
        cf.runs.push_back(std::move(r.grid));
    }
    return cf;
}

PairCanonical commuting_pair_canonical(const Matrix& a2, const Matrix& a3, const std::vector<Scalar>& hints)
{
    if (!(a2 * a3 == a3 * a2))
        throw NotCommuting("reduced pair does not commute");
    JordanDecomposition d = jordan_decompose(a2, hints);
    Matrix a = inverse(d.s) * a3 * d.s;
    CanonicalForm cf{d.spec, {}};
    auto off = d.spec.offsets();
    size_t n = d.spec.dim();
    for (auto& run : d.spec.runs()) {
        size_t start = off[run.first];
        size_t len = 0;
        std::vector<size_t> sizes;
        for (size_t b = 0; b < run.count; ++b) {
            sizes.push_back(d.spec.blocks[run.first + b].size);
            len += sizes.back();
        }
        // A must vanish outside the run's diagonal block
        for (size_t r = start; r < start + len; ++r)
            for (size_t c = 0; c < n; ++c)
                if ((c < start || c >= start + len) && (!a(r, c).is_zero() || !a(c, r).is_zero()))
                    throw Error("internal: commuting matrix couples distinct eigenvalues");
        cf.runs.push_back(commutant_to_poly_matrix(a.block(start, start, len, len), sizes));
    }
    return {cf, d.s};
}

bool same_class(const CanonicalForm& a, const CanonicalForm& b, uint64_t seed)
{
    if (!(a.spec == b.spec) || a.runs.size() != b.runs.size())
        return false;
    auto ra = a.run_data(), rb = b.run_data();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-1000000, 1000000);
    for (size_t k = 0; k < ra.size(); ++k) {
        if (ra[k].grid == rb[k].grid)
            continue;
        if (ra[k].sizes.size() == 1)
            return false;
        JordanSpec rs;
        for (size_t s : ra[k].sizes)
            rs.blocks.push_back({ra[k].lambda, s});
        Matrix a1 = poly_matrix_to_commutant(ra[k].grid, ra[k].sizes);
        Matrix a2 = poly_matrix_to_commutant(rb[k].grid, rb[k].sizes);
        auto basis = commutant_basis(rs);
        size_t n = a1.rows();
        // columns: vec(B_i a1 - a2 B_i)
        Matrix sys(n * n, basis.size());
        for (size_t i = 0; i < basis.size(); ++i) {
            Matrix d = basis[i] * a1 - a2 * basis[i];
            for (size_t e = 0; e < n * n; ++e)
                sys(e, i) = d.entries()[e];
        }
        Matrix sol = nullspace(sys);
        if (sol.cols() == 0)
            return false;
        bool found = false;
        for (int attempt = 0; attempt < 4 && !found; ++attempt) {
            Matrix x(n, n);
            for (size_t c = 0; c < sol.cols(); ++c) {
                Scalar w(coef(rng));
                for (size_t i = 0; i < basis.size(); ++i)
                    if (!sol(i, c).is_zero())
                        x += basis[i] * (sol(i, c) * w);
            }
            found = rank(x) == n;
        }
        if (!found)
            return false;
    }
    return true;
}

CanonReport canonicalize_full_rank(const TensorState& psi, const CanonOptions& opts)
{
    CanonReport rep;
    rep.reduction = full_rank_reduce_with_ops(psi, opts.seed);
    const auto& g = rep.reduction.state.gammas;
    size_t n = psi.N;
    Matrix e = Matrix::identity(n);

    // slots independent of E and of the slots already kept
    auto vec = [&](const Matrix& m) {
        Matrix v(n * n, 1);
        for (size_t k = 0; k < n * n; ++k)
            v(k, 0) = m.entries()[k];
        return v;
    };
    Matrix span = vec(e);
    std::vector<size_t> independent;
    for (size_t j = 1; j < psi.L; ++j) {
        Matrix v = vec(g[j]);
        if (!in_span(span, v)) {
            span = span.hcat(v);
            independent.push_back(j);
        }
    }
    Matrix a2(n, n), a3(n, n);
    if (psi.L <= 3) {
        for (size_t j = 1; j < psi.L; ++j)
            rep.kept_slots.push_back(j);
        if (psi.L > 1)
            a2 = g[1];
        if (psi.L > 2)
            a3 = g[2];
    } else {
        if (independent.size() > 2)
            throw NotCommuting("slots span more than E plus two independent matrices; no commuting-pair reduction");
        rep.kept_slots = independent;
        if (independent.size() > 0)
            a2 = g[independent[0]];
        if (independent.size() > 1)
            a3 = g[independent[1]];
    }
    if (independent.empty()) {
        rep.proportional = true;
        TensorState shifted = eigen_shift(TensorState({e, a2, a3}), opts.hints);
        a2 = shifted.gammas[1];
        a3 = shifted.gammas[2];
    }
    rep.commuting = a2 * a3 == a3 * a2;
    if (!rep.commuting)
        return rep;
    PairCanonical pc = commuting_pair_canonical(a2, a3, opts.hints);
    rep.cf = std::move(pc.cf);
    rep.witness = std::move(pc.witness);
    return rep;
}

} // namespace slocc
