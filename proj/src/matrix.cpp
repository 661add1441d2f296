#include "slocc/matrix.hpp"

#include "slocc/errors.hpp"

namespace slocc {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (auto& r : rows) {
        if (r.size() != cols_)
            throw DimensionMismatch("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(size_t n)
{
    Matrix m(n, n);
    for (size_t k = 0; k < n; ++k)
        m(k, k) = 1;
    return m;
}

Matrix Matrix::diag(const std::vector<Scalar>& d)
{
    Matrix m(d.size(), d.size());
    for (size_t k = 0; k < d.size(); ++k)
        m(k, k) = d[k];
    return m;
}

Matrix Matrix::jordan_block(size_t n, const Scalar& lambda)
{
    Matrix m(n, n);
    for (size_t k = 0; k < n; ++k) {
        m(k, k) = lambda;
        if (k + 1 < n)
            m(k, k + 1) = 1;
    }
    return m;
}

bool Matrix::is_zero() const
{
    for (auto& x : a_)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw DimensionMismatch("block out of range");
    Matrix b(nr, nc);
    for (size_t r = 0; r < nr; ++r)
        for (size_t c = 0; c < nc; ++c)
            b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void Matrix::set_block(size_t r0, size_t c0, const Matrix& b)
{
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw DimensionMismatch("block out of range");
    for (size_t r = 0; r < b.rows_; ++r)
        for (size_t c = 0; c < b.cols_; ++c)
            (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::hcat(const Matrix& b) const
{
    if (rows_ != b.rows_)
        throw DimensionMismatch("hcat row mismatch");
    Matrix m(rows_, cols_ + b.cols_);
    m.set_block(0, 0, *this);
    m.set_block(0, cols_, b);
    return m;
}

Matrix Matrix::vcat(const Matrix& b) const
{
    if (cols_ != b.cols_)
        throw DimensionMismatch("vcat column mismatch");
    Matrix m(rows_ + b.rows_, cols_);
    m.set_block(0, 0, *this);
    m.set_block(rows_, 0, b);
    return m;
}

Scalar Matrix::trace() const
{
    Scalar t;
    for (size_t k = 0; k < std::min(rows_, cols_); ++k)
        t += (*this)(k, k);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& b)
{
    if (rows_ != b.rows_ || cols_ != b.cols_)
        throw DimensionMismatch("matrix sum shape mismatch");
    for (size_t k = 0; k < a_.size(); ++k)
        if (!b.a_[k].is_zero())
            a_[k] += b.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& b)
{
    if (rows_ != b.rows_ || cols_ != b.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    for (size_t k = 0; k < a_.size(); ++k)
        if (!b.a_[k].is_zero())
            a_[k] -= b.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s)
{
    for (auto& x : a_)
        if (!x.is_zero())
            x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (size_t r = 0; r < a.rows_; ++r)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero())
                continue;
            for (size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero())
                    m(r, c) += x * b(k, c);
        }
    return m;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m)
{
    os << "[";
    for (size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (size_t c = 0; c < m.cols(); ++c)
            os << (c ? ", " : "") << m(r, c);
        os << "]";
    }
    return os << "]";
}

Matrix block_diag(const std::vector<Matrix>& blocks)
{
    size_t nr = 0, nc = 0;
    for (auto& b : blocks) {
        nr += b.rows();
        nc += b.cols();
    }
    Matrix m(nr, nc);
    size_t r = 0, c = 0;
    for (auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

Matrix pow(const Matrix& m, unsigned e)
{
    Matrix r = Matrix::identity(m.rows());
    for (unsigned k = 0; k < e; ++k)
        r = r * m;
    return r;
}

Rref rref(const Matrix& m)
{
    Rref out{m, {}};
    Matrix& a = out.r;
    size_t row = 0;
    for (size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        size_t p = row;
        while (p < a.rows() && a(p, c).is_zero())
            ++p;
        if (p == a.rows())
            continue;
        if (p != row)
            for (size_t k = 0; k < a.cols(); ++k)
                std::swap(a(p, k), a(row, k));
        Scalar inv = a(row, c).inv();
        for (size_t k = c; k < a.cols(); ++k)
            if (!a(row, k).is_zero())
                a(row, k) *= inv;
        for (size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, c).is_zero())
                continue;
            Scalar f = a(r, c);
            for (size_t k = c; k < a.cols(); ++k)
                if (!a(row, k).is_zero())
                    a(r, k) -= f * a(row, k);
        }
        out.pivots.push_back(c);
        ++row;
    }
    return out;
}

size_t rank(const Matrix& m)
{
    return rref(m).pivots.size();
}

Matrix inverse(const Matrix& m)
{
    if (!m.square())
        throw DimensionMismatch("inverse of non-square matrix");
    size_t n = m.rows();
    Rref e = rref(m.hcat(Matrix::identity(n)));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        throw SingularMatrix("matrix is singular");
    return e.r.block(0, n, n, n);
}

Scalar determinant(const Matrix& m)
{
    if (!m.square())
        throw DimensionMismatch("determinant of non-square matrix");
    Matrix a = m;
    size_t n = a.rows();
    Scalar det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && a(p, c).is_zero())
            ++p;
        if (p == n)
            return Scalar(0);
        if (p != c) {
            for (size_t k = 0; k < n; ++k)
                std::swap(a(p, k), a(c, k));
            det = -det;
        }
        det *= a(c, c);
        Scalar inv = a(c, c).inv();
        for (size_t r = c + 1; r < n; ++r) {
            if (a(r, c).is_zero())
                continue;
            Scalar f = a(r, c) * inv;
            for (size_t k = c; k < n; ++k)
                if (!a(c, k).is_zero())
                    a(r, k) -= f * a(c, k);
        }
    }
    return det;
}

Matrix nullspace(const Matrix& m)
{
    Rref e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : e.pivots)
        is_pivot[p] = true;
    std::vector<size_t> free;
    for (size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free.push_back(c);
    Matrix basis(m.cols(), free.size());
    for (size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = 1;
        for (size_t r = 0; r < e.pivots.size(); ++r)
            basis(e.pivots[r], k) = -e.r(r, free[k]);
    }
    return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw DimensionMismatch("solve shape mismatch");
    size_t n = a.cols();
    Rref e = rref(a.hcat(b));
    Matrix x(n, b.cols());
    for (size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= n) // pivot in the b part: inconsistent
            return std::nullopt;
        for (size_t c = 0; c < b.cols(); ++c)
            x(e.pivots[r], c) = e.r(r, n + c);
    }
    return x;
}

bool in_span(const Matrix& basis, const Matrix& v)
{
    if (basis.cols() == 0)
        return v.is_zero();
    return rank(basis.hcat(v)) == rank(basis);
}

std::vector<Scalar> char_poly(const Matrix& m)
{
    if (!m.square())
        throw DimensionMismatch("char_poly of non-square matrix");
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    size_t n = m.rows();
    std::vector<Scalar> c(n + 1);
    c[n] = 1;
    Matrix mk(n, n);
    for (size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (size_t d = 0; d < n; ++d)
            mk(d, d) += c[n - k + 1];
        c[n - k] = -(m * mk).trace() / Scalar(static_cast<long>(k));
    }
    return c;
}

} // namespace slocc
