// Independent brute-force reference computations used only by tests.
#ifndef SLOCC_TEST_ORACLES_HPP
#define SLOCC_TEST_ORACLES_HPP

#include "slocc/matrix.hpp"

#include <random>
#include <vector>

namespace oracle {

using slocc::Matrix;
using slocc::Scalar;

inline Matrix minor_of(const Matrix& m, size_t skip_r, size_t skip_c)
{
    Matrix out(m.rows() - 1, m.cols() - 1);
    for (size_t r = 0, rr = 0; r < m.rows(); ++r) {
        if (r == skip_r)
            continue;
        for (size_t c = 0, cc = 0; c < m.cols(); ++c) {
            if (c == skip_c)
                continue;
            out(rr, cc++) = m(r, c);
        }
        ++rr;
    }
    return out;
}

// Laplace expansion along the first row
inline Scalar cofactor_det(const Matrix& m)
{
    if (m.rows() == 0)
        return Scalar(1);
    Scalar d;
    for (size_t c = 0; c < m.cols(); ++c) {
        if (m(0, c).is_zero())
            continue;
        Scalar t = m(0, c) * cofactor_det(minor_of(m, 0, c));
        d += (c % 2) ? -t : t;
    }
    return d;
}

inline void subsets(size_t n, size_t k, size_t from, std::vector<size_t>& cur, std::vector<std::vector<size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (size_t i = from; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// largest k with a nonzero k x k minor
inline size_t minor_rank(const Matrix& m)
{
    for (size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        std::vector<std::vector<size_t>> rs, cs;
        std::vector<size_t> cur;
        subsets(m.rows(), k, 0, cur, rs);
        subsets(m.cols(), k, 0, cur, cs);
        for (auto& r : rs)
            for (auto& c : cs) {
                Matrix sub(k, k);
                for (size_t i = 0; i < k; ++i)
                    for (size_t j = 0; j < k; ++j)
                        sub(i, j) = m(r[i], c[j]);
                if (!cofactor_det(sub).is_zero())
                    return k;
            }
    }
    return 0;
}

// adjugate / determinant
inline Matrix adjugate_inverse(const Matrix& m)
{
    size_t n = m.rows();
    Scalar d = cofactor_det(m);
    Matrix inv(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            Scalar cof = n == 1 ? Scalar(1) : cofactor_det(minor_of(m, c, r));
            inv(r, c) = ((r + c) % 2 ? -cof : cof) / d;
        }
    return inv;
}

// det(tI - m) sampled at t = 0..n and Lagrange-interpolated, low to high
inline std::vector<Scalar> interpolated_char_poly(const Matrix& m)
{
    size_t n = m.rows();
    std::vector<Scalar> coeffs(n + 1);
    for (size_t i = 0; i <= n; ++i) {
        Scalar ti(static_cast<long>(i));
        Scalar yi = cofactor_det(Matrix::identity(n) * ti - m);
        // basis polynomial prod_{j != i} (t - j)/(i - j)
        std::vector<Scalar> basis{Scalar(1)};
        Scalar denom(1);
        for (size_t j = 0; j <= n; ++j) {
            if (j == i)
                continue;
            std::vector<Scalar> next(basis.size() + 1);
            for (size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * Scalar(static_cast<long>(j));
            }
            basis = next;
            denom *= Scalar(static_cast<long>(i) - static_cast<long>(j));
        }
        for (size_t k = 0; k <= n; ++k)
            coeffs[k] += yi * basis[k] / denom;
    }
    return coeffs;
}

// dimension of {M : M J = J M} from the n^2 x n^2 operator vec(M) -> vec(MJ - JM)
inline size_t kronecker_commutant_dim(const Matrix& j)
{
    size_t n = j.rows();
    Matrix op(n * n, n * n);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            size_t col = a * n + b; // unknown M(a,b)
            // (MJ)(a,c) += M(a,b) J(b,c); (JM)(r,b) += J(r,a) M(a,b)
            for (size_t c = 0; c < n; ++c)
                if (!j(b, c).is_zero())
                    op(a * n + c, col) += j(b, c);
            for (size_t r = 0; r < n; ++r)
                if (!j(r, a).is_zero())
                    op(r * n + b, col) -= j(r, a);
        }
    return n * n - slocc::rank(op);
}

inline Scalar small_rational(std::mt19937_64& rng, long bound)
{
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    return Scalar::frac(num(rng), den(rng));
}

inline Matrix random_matrix(std::mt19937_64& rng, size_t r, size_t c, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t k = 0; k < c; ++k)
            m(i, k) = Scalar(d(rng));
    return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, size_t n, long bound)
{
    for (;;) {
        Matrix m = random_matrix(rng, n, n, bound);
        if (slocc::rank(m) == n)
            return m;
    }
}

} // namespace oracle

#endif
