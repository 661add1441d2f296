#include "slocc/canon.hpp"

#include "slocc/errors.hpp"

namespace slocc {

namespace {

// rows spanning the annihilator of the column span of w
Matrix annihilator(const Matrix& w, size_t n)
{
    if (w.cols() == 0)
        return Matrix::identity(n);
    return nullspace(w.transpose()).transpose();
}

// largest V with g_j V inside lambda V for every j
Matrix invariant_limit(const Matrix& lambda, const std::vector<Matrix>& gs)
{
    size_t n = lambda.rows();
    Matrix v = Matrix::identity(n);
    for (;;) {
        Matrix ann = annihilator(lambda * v, n);
        if (ann.rows() == 0)
            return v;
        Matrix cons(0, v.cols());
        for (auto& g : gs)
            cons = cons.vcat(ann * g * v);
        Matrix k = nullspace(cons);
        if (k.cols() == v.cols())
            return v;
        v = v * k;
        if (v.cols() == 0)
            return v;
    }
}

Matrix select_columns(const Matrix& m, const std::vector<size_t>& cols)
{
    Matrix out(m.rows(), cols.size());
    for (size_t k = 0; k < cols.size(); ++k)
        out.set_block(0, k, m.col(cols[k]));
    return out;
}

// X = x0 + r Z with g_j X = lambda X m_j for all j
std::optional<Matrix> intertwiner(const Matrix& lambda, const std::vector<Matrix>& gs, const std::vector<Matrix>& ms,
                                  const Matrix& x0, const Matrix& r)
{
    size_t n = x0.rows(), k = x0.cols(), rho = r.cols();
    size_t eqs = gs.size() * n * k;
    Matrix sys(eqs, rho * k), rhs(eqs, 1);
    for (size_t j = 0; j < gs.size(); ++j) {
        Matrix gr = gs[j] * r, lr = lambda * r;
        Matrix b = lambda * x0 * ms[j] - gs[j] * x0;
        for (size_t row = 0; row < n; ++row)
            for (size_t c = 0; c < k; ++c) {
                size_t e = (j * n + row) * k + c;
                rhs(e, 0) = b(row, c);
                for (size_t a = 0; a < rho; ++a) {
                    // (g r Z)(row,c) = sum_a gr(row,a) Z(a,c); (lambda r Z m)(row,c) = sum_a,b lr(row,a) Z(a,b) m(b,c)
                    if (!gr(row, a).is_zero())
                        sys(e, a * k + c) += gr(row, a);
                    if (lr(row, a).is_zero())
                        continue;
                    for (size_t bb = 0; bb < k; ++bb)
                        if (!ms[j](bb, c).is_zero())
                            sys(e, a * k + bb) -= lr(row, a) * ms[j](bb, c);
                }
            }
    }
    if (rho == 0)
        return rhs.is_zero() ? std::optional<Matrix>(x0) : std::nullopt;
    auto z = solve(sys, rhs);
    if (!z)
        return std::nullopt;
    Matrix zm(rho, k);
    for (size_t a = 0; a < rho; ++a)
        for (size_t c = 0; c < k; ++c)
            zm(a, c) = (*z)(a * k + c, 0);
    return x0 + r * zm;
}

bool is_lambda(const Matrix& m, size_t r)
{
    Matrix expect(m.rows(), m.cols());
    for (size_t k = 0; k < r; ++k)
        expect(k, k) = 1;
    return m == expect;
}

} // namespace

PartitionedForm nonfull_rank_split(const TensorState& psi)
{
    size_t n_all = psi.N;
    const Matrix& lambda = psi.gammas[0];
    size_t r = rank(lambda);
    if (r == n_all || !is_lambda(lambda, r))
        throw InvalidArgument("first slot must be diag(I_r, 0) with r < N");
    std::vector<Matrix> gs(psi.gammas.begin() + 1, psi.gammas.end());
    std::vector<Matrix> gts;
    for (auto& g : gs)
        gts.push_back(g.transpose());

    Matrix vs = invariant_limit(lambda, gs);
    Matrix ys = invariant_limit(lambda, gts);
    Matrix pairing = ys.transpose() * lambda * vs;
    Rref pr = rref(pairing);
    size_t n = pr.pivots.size();

    PartitionedForm pf;
    pf.i = n_all - r;
    if (n == 0) {
        pf.n = 0;
        pf.m = n_all;
        pf.beta_part = gs;
        pf.lambda_prime = lambda;
        pf.p = Matrix::identity(n_all);
        pf.q = Matrix::identity(n_all);
        return pf;
    }

    Matrix x0 = select_columns(vs, pr.pivots);
    Matrix rv = vs * nullspace(pairing);
    Matrix y1 = select_columns(ys, rref(pairing.transpose()).pivots);
    Matrix ry = ys * nullspace(pairing.transpose());

    // induced maps on V*/R_V: g_j x = lambda v', v' = x0 m + rv (...)
    Matrix basis = x0.hcat(rv);
    std::vector<Matrix> ms;
    for (auto& g : gs) {
        Matrix mj(n, n);
        for (size_t c = 0; c < n; ++c) {
            auto coef = solve(lambda * vs, g * x0.col(c));
            if (!coef)
                throw NoSplitFound("invariant subspace iteration is inconsistent");
            auto split = solve(basis, vs * *coef);
            if (!split)
                throw NoSplitFound("quotient representative not found");
            mj.set_block(0, c, split->block(0, 0, n, 1));
        }
        ms.push_back(std::move(mj));
    }
    auto x = intertwiner(lambda, gs, ms, x0, rv);
    if (!x)
        throw NoSplitFound("no representative X with Gamma_j X = Lambda X M_j");
    Matrix gmat = inverse(y1.transpose() * lambda * *x).transpose();
    std::vector<Matrix> mts;
    for (auto& mj : ms)
        mts.push_back(mj.transpose());
    auto y = intertwiner(lambda, gts, mts, y1 * gmat, ry);
    if (!y)
        throw NoSplitFound("no dual representative Y");

    Matrix u = nullspace((lambda * *x).transpose());
    Matrix v2 = nullspace(y->transpose() * lambda);
    Matrix p = y->transpose().vcat(u.transpose());
    Matrix q = x->hcat(v2);
    size_t m = n_all - n;
    Matrix beta_lambda = (p * lambda * q).block(n, n, m, m);
    RankNormalForm rn = rank_normal_form(beta_lambda);
    Matrix p2 = Matrix::identity(n_all), q2 = Matrix::identity(n_all);
    p2.set_block(n, n, rn.p);
    q2.set_block(n, n, rn.q);
    p = p2 * p;
    q = q * q2;

    if (!(p * lambda * q == lambda))
        throw NoSplitFound("stabilizer check failed");
    pf.n = n;
    pf.m = m;
    pf.p = p;
    pf.q = q;
    pf.lambda_prime = lambda.block(n, n, m, m);
    for (auto& g : gs) {
        Matrix t = p * g * q;
        if (!t.block(0, n, n, m).is_zero() || !t.block(n, 0, m, n).is_zero())
            throw NoSplitFound("split is not block diagonal");
        pf.gamma_part.push_back(t.block(0, 0, n, n));
        pf.beta_part.push_back(t.block(n, n, m, m));
    }
    return pf;
}

bool beta_canonical_check(const PartitionedForm& pf, uint64_t seed)
{
    bool all_zero = true;
    for (auto& b : pf.beta_part)
        all_zero = all_zero && b.is_zero();
    if (all_zero || pf.m <= pf.i)
        return false;
    size_t target = pf.m - pf.i;
    if (rank(pf.lambda_prime) != target)
        return false;
    return max_rank_of_pencil(pf.lambda_prime, pf.beta_part, seed).r == target;
}

} // namespace slocc
