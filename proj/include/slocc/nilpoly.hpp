#ifndef SLOCC_NILPOLY_HPP
#define SLOCC_NILPOLY_HPP

#include "slocc/matrix.hpp"

#include <vector>

namespace slocc {

// polynomial in the nilpotent x = J_n(0), arithmetic mod x^n
class TruncPoly {
public:
    TruncPoly() = default;
    explicit TruncPoly(size_t order) : c_(order) {}
    explicit TruncPoly(std::vector<Scalar> coeffs);
    static TruncPoly constant(size_t order, const Scalar& s);
    // lambda + x
    static TruncPoly affine(size_t order, const Scalar& lambda, const Scalar& slope = Scalar(1));

    size_t order() const { return c_.size(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar& operator[](size_t k) { return c_[k]; }
    const Scalar& operator[](size_t k) const { return c_[k]; }
    bool is_zero() const;
    // same coefficients, padded with zeros or truncated to the new order
    TruncPoly resized(size_t order) const;

    TruncPoly& operator+=(const TruncPoly& o);
    TruncPoly& operator-=(const TruncPoly& o);
    TruncPoly& operator*=(const Scalar& s);
    friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
    friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
    friend TruncPoly operator*(TruncPoly a, const Scalar& s) { return a *= s; }
    friend TruncPoly operator*(const Scalar& s, TruncPoly a) { return a *= s; }
    friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

    std::string str() const;

private:
    std::vector<Scalar> c_;
};

TruncPoly mul(const TruncPoly& f, const TruncPoly& g);
TruncPoly reciprocal(const TruncPoly& f);
// f(g(x)) mod x^n; g may have a constant term
TruncPoly compose(const TruncPoly& f, const TruncPoly& g);
// g in u = x - f(0) with g(f - f(0)) = x mod x^n
TruncPoly shifted_reversion(const TruncPoly& f);
// g(f - f(0))
TruncPoly compose_shifted(const TruncPoly& g, const TruncPoly& f);

// f(J_n(lambda)); for lambda = 0 the upper-triangular Toeplitz matrix of f
Matrix eval_at_jordan(const TruncPoly& f, const Scalar& lambda);
Matrix poly_to_toeplitz(const TruncPoly& f);
TruncPoly toeplitz_to_poly(const Matrix& m);

// Grid entry (k,l) has order sizes[l]; block (k,l) of the matrix is the
// top-left sizes[k] x sizes[l] corner of the Toeplitz matrix of the entry, so
// when sizes[k] < sizes[l] the lowest sizes[l] - sizes[k] coefficients must vanish.
using PolyGrid = std::vector<std::vector<TruncPoly>>;

Matrix poly_matrix_to_commutant(const PolyGrid& grid, const std::vector<size_t>& sizes);
// inverse of the above; checks that m lies in the pattern
PolyGrid commutant_to_poly_matrix(const Matrix& m, const std::vector<size_t>& sizes);

} // namespace slocc

#endif
