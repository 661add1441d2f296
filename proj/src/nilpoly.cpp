#include "slocc/nilpoly.hpp"

#include "slocc/errors.hpp"

#include <sstream>

namespace slocc {

TruncPoly::TruncPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs))
{
    if (c_.empty())
        throw OrderMismatch("truncated polynomial of order 0");
}

TruncPoly TruncPoly::constant(size_t order, const Scalar& s)
{
    TruncPoly p(order);
    if (order)
        p.c_[0] = s;
    return p;
}

TruncPoly TruncPoly::affine(size_t order, const Scalar& lambda, const Scalar& slope)
{
    TruncPoly p = constant(order, lambda);
    if (order > 1)
        p.c_[1] = slope;
    return p;
}

bool TruncPoly::is_zero() const
{
    for (auto& c : c_)
        if (!c.is_zero())
            return false;
    return true;
}

TruncPoly TruncPoly::resized(size_t order) const
{
    TruncPoly p(order);
    for (size_t k = 0; k < std::min(order, c_.size()); ++k)
        p.c_[k] = c_[k];
    return p;
}

static void check_order(const TruncPoly& a, const TruncPoly& b)
{
    if (a.order() != b.order())
        throw OrderMismatch("order " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o)
{
    check_order(*this, o);
    for (size_t k = 0; k < c_.size(); ++k)
        c_[k] += o.c_[k];
    return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& o)
{
    check_order(*this, o);
    for (size_t k = 0; k < c_.size(); ++k)
        c_[k] -= o.c_[k];
    return *this;
}

TruncPoly& TruncPoly::operator*=(const Scalar& s)
{
    for (auto& c : c_)
        c *= s;
    return *this;
}

std::string TruncPoly::str() const
{
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < c_.size(); ++k)
        os << (k ? ", " : "") << c_[k];
    os << "]";
    return os.str();
}

TruncPoly mul(const TruncPoly& f, const TruncPoly& g)
{
    check_order(f, g);
    size_t n = f.order();
    TruncPoly h(n);
    for (size_t i = 0; i < n; ++i) {
        if (f[i].is_zero())
            continue;
        for (size_t j = 0; i + j < n; ++j)
            if (!g[j].is_zero())
                h[i + j] += f[i] * g[j];
    }
    return h;
}

TruncPoly reciprocal(const TruncPoly& f)
{
    if (f[0].is_zero())
        throw NotInvertible("constant term is zero");
    // sum_k f_k g_{m-k} = delta_{m0}
    size_t n = f.order();
    TruncPoly g(n);
    Scalar inv = f[0].inv();
    g[0] = inv;
    for (size_t m = 1; m < n; ++m) {
        Scalar s;
        for (size_t k = 1; k <= m; ++k)
            if (!f[k].is_zero())
                s += f[k] * g[m - k];
        g[m] = -s * inv;
    }
    return g;
}

TruncPoly compose(const TruncPoly& f, const TruncPoly& g)
{
    check_order(f, g);
    size_t n = f.order();
    TruncPoly r(n);
    for (size_t k = n; k-- > 0;) {
        r = mul(r, g);
        r[0] += f[k];
    }
    return r;
}

TruncPoly shifted_reversion(const TruncPoly& f)
{
    size_t n = f.order();
    if (n == 1)
        return TruncPoly(1);
    if (f[1].is_zero())
        throw NotReversible("linear coefficient is zero");
    TruncPoly h = f;
    h[0] = 0;
    // powers[i] = h^i; [x^k] h^k = h_1^k
    std::vector<TruncPoly> powers{TruncPoly::constant(n, 1)};
    for (size_t i = 1; i < n; ++i)
        powers.push_back(mul(powers.back(), h));
    TruncPoly g(n);
    for (size_t k = 1; k < n; ++k) {
        Scalar rhs = k == 1 ? Scalar(1) : Scalar(0);
        for (size_t i = 1; i < k; ++i)
            if (!g[i].is_zero())
                rhs -= g[i] * powers[i][k];
        g[k] = rhs / powers[k][k];
    }
    return g;
}

TruncPoly compose_shifted(const TruncPoly& g, const TruncPoly& f)
{
    TruncPoly h = f;
    h[0] = 0;
    return compose(g, h);
}

Matrix poly_to_toeplitz(const TruncPoly& f)
{
    size_t n = f.order();
    Matrix m(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = r; c < n; ++c)
            m(r, c) = f[c - r];
    return m;
}

Matrix eval_at_jordan(const TruncPoly& f, const Scalar& lambda)
{
    // Taylor shift: coefficients of f(lambda + x), exact since deg f < n
    size_t n = f.order();
    std::vector<Scalar> c = f.coeffs();
    if (!lambda.is_zero())
        for (size_t i = 0; i < n; ++i)
            for (size_t k = n - 1; k > i; --k)
                c[k - 1] += lambda * c[k];
    return poly_to_toeplitz(TruncPoly(std::move(c)));
}

TruncPoly toeplitz_to_poly(const Matrix& m)
{
    if (!m.square() || m.rows() == 0)
        throw NotToeplitz("not a non-empty square matrix");
    size_t n = m.rows();
    TruncPoly f(n);
    for (size_t c = 0; c < n; ++c)
        f[c] = m(0, c);
    if (!(poly_to_toeplitz(f) == m))
        throw NotToeplitz("matrix is not upper-triangular Toeplitz");
    return f;
}

static std::vector<size_t> offsets_of(const std::vector<size_t>& sizes)
{
    std::vector<size_t> off;
    size_t o = 0;
    for (size_t s : sizes) {
        off.push_back(o);
        o += s;
    }
    off.push_back(o);
    return off;
}

Matrix poly_matrix_to_commutant(const PolyGrid& grid, const std::vector<size_t>& sizes)
{
    size_t b = sizes.size();
    if (grid.size() != b)
        throw PatternViolation("grid is not square over the blocks");
    auto off = offsets_of(sizes);
    Matrix m(off.back(), off.back());
    for (size_t k = 0; k < b; ++k) {
        if (grid[k].size() != b)
            throw PatternViolation("grid is not square over the blocks");
        for (size_t l = 0; l < b; ++l) {
            const TruncPoly& f = grid[k][l];
            size_t nk = sizes[k], nl = sizes[l];
            if (f.order() != nl)
                throw PatternViolation("grid entry (" + std::to_string(k) + "," + std::to_string(l) +
                                       ") has order " + std::to_string(f.order()) + ", expected " +
                                       std::to_string(nl));
            for (size_t d = 0; nl > nk && d < nl - nk; ++d)
                if (!f[d].is_zero())
                    throw PatternViolation("grid entry (" + std::to_string(k) + "," + std::to_string(l) +
                                           ") has a nonzero coefficient of x^" + std::to_string(d));
            for (size_t r = 0; r < nk; ++r)
                for (size_t c = r; c < nl; ++c)
                    m(off[k] + r, off[l] + c) = f[c - r];
        }
    }
    return m;
}

PolyGrid commutant_to_poly_matrix(const Matrix& m, const std::vector<size_t>& sizes)
{
    size_t b = sizes.size();
    auto off = offsets_of(sizes);
    if (m.rows() != off.back() || m.cols() != off.back())
        throw DimensionMismatch("matrix does not match block sizes");
    PolyGrid grid(b, std::vector<TruncPoly>(b));
    for (size_t k = 0; k < b; ++k)
        for (size_t l = 0; l < b; ++l) {
            // row 0 of the block carries every coefficient
            TruncPoly f(sizes[l]);
            for (size_t c = 0; c < sizes[l]; ++c)
                f[c] = m(off[k], off[l] + c);
            grid[k][l] = f;
        }
    if (!(poly_matrix_to_commutant(grid, sizes) == m))
        throw PatternViolation("matrix is not in the commutant pattern");
    return grid;
}

} // namespace slocc
