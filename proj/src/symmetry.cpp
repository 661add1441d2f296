#include "slocc/symmetry.hpp"

#include "slocc/errors.hpp"

namespace slocc {

bool SymmetryParams::is_identity() const
{
    return *this == SymmetryParams{};
}

Matrix t_ej(const Scalar& z1)
{
    return Matrix{{1, z1, 0}, {0, 1, 0}, {0, 0, 1}};
}

Matrix t_ea(const Scalar& z2)
{
    return Matrix{{1, 0, z2}, {0, 1, 0}, {0, 0, 1}};
}

Matrix t_ja(const Scalar& z3)
{
    return Matrix{{1, 0, 0}, {0, 1, z3}, {0, 0, 1}};
}

Matrix t_rescale(const Scalar& d2, const Scalar& d3)
{
    return Matrix::diag({1, d2, d3});
}

Matrix SymmetryParams::t() const
{
    return t_ej(z1) * t_ea(z2) * t_ja(z3) * t_rescale(d2, d3);
}

SymmetryParams SymmetryParams::from_t(const Matrix& t)
{
    if (!t(0, 0).is_one() || !t(1, 0).is_zero() || !t(2, 0).is_zero() || !t(2, 1).is_zero())
        throw InvalidArgument("T is not upper triangular with t11 = 1");
    if (t(1, 1).is_zero() || t(2, 2).is_zero())
        throw ZeroScale("T is singular");
    SymmetryParams sp;
    sp.d2 = t(1, 1);
    sp.d3 = t(2, 2);
    sp.z3 = t(1, 2) / t(2, 2);
    sp.z1 = t(0, 1) / t(1, 1);
    sp.z2 = t(0, 2) / t(2, 2) - sp.z1 * sp.z3;
    return sp;
}

namespace {

// F convention (order n_l, top-left corner of a Toeplitz matrix) to the
// module convention q = x^{n_k - n_l} F mod x^{n_k} (order n_k), where the
// grid multiplies like a polynomial matrix with row k taken mod x^{n_k}
TruncPoly to_module(const TruncPoly& f, size_t nk, size_t nl)
{
    TruncPoly q(nk);
    for (size_t j = 0; j < nk; ++j) {
        if (nk >= nl) {
            if (j >= nk - nl)
                q[j] = f[j - (nk - nl)];
        } else {
            q[j] = f[j + (nl - nk)];
        }
    }
    return q;
}

TruncPoly from_module(const TruncPoly& q, size_t nk, size_t nl)
{
    TruncPoly f(nl);
    for (size_t i = 0; i < nl; ++i) {
        if (nk >= nl)
            f[i] = q[i + (nk - nl)];
        else if (i >= nl - nk)
            f[i] = q[i - (nl - nk)];
    }
    return f;
}

struct SlotSeries {
    TruncPoly zeta, fj, g;
    Scalar lambda;
};

// 1/e, j/e and the reversion of j/e for scalar slot series
SlotSeries slot_series(const TruncPoly& e, const TruncPoly& j)
{
    if (e[0].is_zero())
        throw DegenerateParameter("first slot becomes singular");
    SlotSeries s;
    s.zeta = reciprocal(e);
    s.fj = mul(s.zeta, j);
    s.lambda = s.fj[0];
    if (s.fj.order() > 1 && s.fj[1].is_zero())
        throw DegenerateParameter("J slot loses its Jordan structure");
    s.g = shifted_reversion(s.fj);
    return s;
}

std::vector<RunData> transform_run(const RunData& run, const Matrix& t)
{
    size_t b = run.sizes.size();
    const Scalar& lam = run.lambda;
    bool off_diagonal = false;
    for (size_t k = 0; k < b; ++k)
        for (size_t l = 0; l < b; ++l)
            if (k != l && !run.grid[k][l].is_zero())
                off_diagonal = true;

    if (!off_diagonal) {
        std::vector<RunData> out;
        for (size_t k = 0; k < b; ++k) {
            size_t n = run.sizes[k];
            const TruncPoly& f = run.grid[k][k];
            TruncPoly x = TruncPoly::affine(n, lam);
            TruncPoly one = TruncPoly::constant(n, 1);
            TruncPoly e = one * t(0, 0) + x * t(0, 1) + f * t(0, 2);
            TruncPoly j = one * t(1, 0) + x * t(1, 1) + f * t(1, 2);
            TruncPoly a = one * t(2, 0) + x * t(2, 1) + f * t(2, 2);
            SlotSeries s = slot_series(e, j);
            TruncPoly fa = mul(s.zeta, a);
            out.push_back({s.lambda, {n}, {{compose(fa, s.g)}}});
        }
        return out;
    }

    if (t(0, 2).is_zero() && t(1, 2).is_zero()) {
        // E and J slots stay scalar series, so the substitution acts entrywise
        size_t nmax = *std::max_element(run.sizes.begin(), run.sizes.end());
        TruncPoly x = TruncPoly::affine(nmax, lam);
        TruncPoly one = TruncPoly::constant(nmax, 1);
        SlotSeries s = slot_series(one * t(0, 0) + x * t(0, 1), one * t(1, 0) + x * t(1, 1));
        TruncPoly shift = one * t(2, 0) + x * t(2, 1);
        RunData out{s.lambda, run.sizes, PolyGrid(b, std::vector<TruncPoly>(b))};
        for (size_t k = 0; k < b; ++k)
            for (size_t l = 0; l < b; ++l) {
                size_t nk = run.sizes[k], nl = run.sizes[l];
                TruncPoly q = to_module(run.grid[k][l], nk, nl) * t(2, 2);
                if (k == l)
                    q += shift.resized(nk);
                q = mul(s.zeta.resized(nk), q);
                out.grid[k][l] = from_module(compose(q, s.g.resized(nk)), nk, nl);
            }
        return {out};
    }

    // general coupled run: realize the run as matrices and re-canonicalize
    JordanSpec rs;
    for (size_t n : run.sizes)
        rs.blocks.push_back({lam, n});
    size_t dim = rs.dim();
    Matrix id = Matrix::identity(dim), jm = assemble_jordan(rs), am = poly_matrix_to_commutant(run.grid, run.sizes);
    Matrix em = id * t(0, 0) + jm * t(0, 1) + am * t(0, 2);
    if (rank(em) < dim)
        throw DegenerateParameter("first slot becomes singular");
    Matrix einv = inverse(em);
    Matrix j2 = einv * (id * t(1, 0) + jm * t(1, 1) + am * t(1, 2));
    Matrix a2 = einv * (id * t(2, 0) + jm * t(2, 1) + am * t(2, 2));
    return commuting_pair_canonical(j2, a2).cf.run_data();
}

} // namespace

CanonicalForm apply_transform(const CanonicalForm& cf, const Matrix& t)
{
    if (t.rows() != 3 || t.cols() != 3)
        throw DimensionMismatch("T must be 3 x 3");
    if (rank(t) < 3)
        throw DegenerateParameter("T is singular");
    std::vector<RunData> pieces;
    for (auto& run : cf.run_data())
        for (auto& p : transform_run(run, t))
            pieces.push_back(std::move(p));
    return normalize_runs(std::move(pieces));
}

CanonicalForm apply_T_EJ(const CanonicalForm& cf, const Scalar& z1)
{
    return apply_transform(cf, t_ej(z1));
}

CanonicalForm apply_T_EA(const CanonicalForm& cf, const Scalar& z2)
{
    return apply_transform(cf, t_ea(z2));
}

CanonicalForm apply_T_JA(const CanonicalForm& cf, const Scalar& z3)
{
    return apply_transform(cf, t_ja(z3));
}

CanonicalForm apply_rescale(const CanonicalForm& cf, const Scalar& d2, const Scalar& d3)
{
    if (d2.is_zero() || d3.is_zero())
        throw ZeroScale("rescale factors must be nonzero");
    return apply_transform(cf, t_rescale(d2, d3));
}

CanonicalForm apply_all(const CanonicalForm& cf, const SymmetryParams& sp, const std::vector<Stage>& order)
{
    CanonicalForm out = cf;
    for (Stage s : order) {
        switch (s) {
        case Stage::Rescale:
            out = apply_rescale(out, sp.d2, sp.d3);
            break;
        case Stage::JA:
            out = apply_T_JA(out, sp.z3);
            break;
        case Stage::EA:
            out = apply_T_EA(out, sp.z2);
            break;
        case Stage::EJ:
            out = apply_T_EJ(out, sp.z1);
            break;
        }
    }
    return out;
}

CanonicalForm apply_params(const CanonicalForm& cf, const SymmetryParams& sp)
{
    if (sp.d2.is_zero() || sp.d3.is_zero())
        throw ZeroScale("rescale factors must be nonzero");
    return apply_transform(cf, sp.t());
}

Scalar mobius_2nn(const Scalar& lambda, const Scalar& t11, const Scalar& t12, const Scalar& t22)
{
    Scalar den = t11 + t12 * lambda;
    if (den.is_zero() || (t11 * t22).is_zero())
        throw DegenerateParameter("degenerate Moebius parameters");
    return t22 * lambda / den;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Equivalent:
        return "Equivalent";
    case Verdict::Inequivalent:
        return "Inequivalent";
    case Verdict::Undecided:
        break;
    }
    return "Undecided";
}

} // namespace slocc
