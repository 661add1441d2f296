#include "slocc/jordan.hpp"

#include "slocc/errors.hpp"
#include "slocc/poly.hpp"

#include <algorithm>

namespace slocc {

size_t JordanSpec::dim() const
{
    size_t n = 0;
    for (auto& b : blocks)
        n += b.size;
    return n;
}

std::vector<Run> JordanSpec::runs() const
{
    std::vector<Run> out;
    for (size_t k = 0; k < blocks.size(); ++k) {
        if (out.empty() || !(blocks[out.back().first].lambda == blocks[k].lambda))
            out.push_back({k, 0});
        ++out.back().count;
    }
    return out;
}

std::vector<size_t> JordanSpec::offsets() const
{
    std::vector<size_t> off;
    size_t o = 0;
    for (auto& b : blocks) {
        off.push_back(o);
        o += b.size;
    }
    return off;
}

bool JordanSpec::normalized() const
{
    for (size_t k = 1; k < blocks.size(); ++k) {
        auto& a = blocks[k - 1];
        auto& b = blocks[k];
        if (b.lambda < a.lambda)
            return false;
        if (a.lambda == b.lambda && a.size < b.size)
            return false;
    }
    for (auto& b : blocks)
        if (b.size == 0)
            return false;
    return true;
}

Matrix assemble_jordan(const JordanSpec& spec)
{
    std::vector<Matrix> bl;
    for (auto& b : spec.blocks)
        bl.push_back(Matrix::jordan_block(b.size, b.lambda));
    return block_diag(bl);
}

std::vector<Scalar> eigenvalues_in_field(const Matrix& m, const std::vector<Scalar>& hints)
{
    return field_roots(Poly(char_poly(m)), hints);
}

JordanDecomposition jordan_decompose(const Matrix& m, const std::vector<Scalar>& hints)
{
    if (!m.square())
        throw DimensionMismatch("jordan_decompose of non-square matrix");
    size_t n = m.rows();
    std::vector<Scalar> eig = eigenvalues_in_field(m, hints);
    JordanDecomposition out{Matrix(n, 0), {}};

    size_t k0 = 0;
    while (k0 < eig.size()) {
        size_t mult = 0;
        while (k0 + mult < eig.size() && eig[k0 + mult] == eig[k0])
            ++mult;
        const Scalar lambda = eig[k0];
        k0 += mult;

        Matrix b = m - Matrix::identity(n) * lambda;
        // kernels of b^k up to the stable one
        std::vector<Matrix> ker{Matrix(n, 0)};
        Matrix bk = Matrix::identity(n);
        while (ker.back().cols() < mult) {
            bk = bk * b;
            ker.push_back(nullspace(bk));
        }
        size_t depth = ker.size() - 1;

        struct Chain {
            Matrix top;
            size_t len;
        };
        std::vector<Chain> chains;
        for (size_t lvl = depth; lvl >= 1; --lvl) {
            // span of ker(b^{lvl-1}) and level-lvl members of longer chains
            Matrix span = ker[lvl - 1];
            for (auto& c : chains)
                span = span.hcat(pow(b, static_cast<unsigned>(c.len - lvl)) * c.top);
            size_t r = rank(span);
            for (size_t j = 0; j < ker[lvl].cols(); ++j) {
                Matrix v = ker[lvl].col(j);
                Matrix trial = span.hcat(v);
                size_t rt = rank(trial);
                if (rt > r) {
                    chains.push_back({v, lvl});
                    span = std::move(trial);
                    r = rt;
                }
            }
        }
        for (auto& c : chains) {
            for (size_t j = c.len; j-- > 0;)
                out.s = out.s.hcat(pow(b, static_cast<unsigned>(j)) * c.top);
            out.spec.blocks.push_back({lambda, c.len});
        }
    }
    if (!(inverse(out.s) * m * out.s == assemble_jordan(out.spec)))
        throw Error("internal: Jordan chain verification failed");
    return out;
}

std::vector<Matrix> commutant_basis(const JordanSpec& spec)
{
    size_t n = spec.dim();
    auto off = spec.offsets();
    std::vector<Matrix> basis;
    for (size_t k = 0; k < spec.blocks.size(); ++k)
        for (size_t l = 0; l < spec.blocks.size(); ++l) {
            if (!(spec.blocks[k].lambda == spec.blocks[l].lambda))
                continue;
            size_t nk = spec.blocks[k].size, nl = spec.blocks[l].size;
            // block (k,l) = top-left nk x nl corner of the Toeplitz matrix of x^d;
            // degrees below nl - nk would break [M, J] = 0
            size_t dmin = nl > nk ? nl - nk : 0;
            for (size_t d = dmin; d < nl; ++d) {
                Matrix m(n, n);
                for (size_t r = 0; r < nk; ++r)
                    if (r + d < nl)
                        m(off[k] + r, off[l] + r + d) = 1;
                basis.push_back(std::move(m));
            }
        }
    return basis;
}

size_t commutant_dimension(const JordanSpec& spec)
{
    size_t d = 0;
    for (auto& a : spec.blocks)
        for (auto& b : spec.blocks)
            if (a.lambda == b.lambda)
                d += std::min(a.size, b.size);
    return d;
}

} // namespace slocc
