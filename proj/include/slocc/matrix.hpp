#ifndef SLOCC_MATRIX_HPP
#define SLOCC_MATRIX_HPP

#include "slocc/scalar.hpp"

#include <optional>
#include <vector>

namespace slocc {

class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(size_t n);
    static Matrix diag(const std::vector<Scalar>& d);
    // J_n(lambda): lambda on the diagonal, ones on the superdiagonal
    static Matrix jordan_block(size_t n, const Scalar& lambda);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Scalar& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    const std::vector<Scalar>& entries() const { return a_; }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
    void set_block(size_t r0, size_t c0, const Matrix& b);
    Matrix col(size_t c) const { return block(0, c, rows_, 1); }
    Matrix hcat(const Matrix& b) const;
    Matrix vcat(const Matrix& b) const;
    Scalar trace() const;

    Matrix& operator+=(const Matrix& b);
    Matrix& operator-=(const Matrix& b);
    Matrix& operator*=(const Scalar& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator-() const { return *this * Scalar(-1); }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix block_diag(const std::vector<Matrix>& blocks);
Matrix pow(const Matrix& m, unsigned e);

struct Rref {
    Matrix r;
    std::vector<size_t> pivots;
};

// reduced row echelon form by exact elimination, pivots = pivot columns
Rref rref(const Matrix& m);
size_t rank(const Matrix& m);
Matrix inverse(const Matrix& m);
Scalar determinant(const Matrix& m);
// basis of {v : m v = 0} as columns, one per free column in increasing order
Matrix nullspace(const Matrix& m);
// some x with a x = b, if any
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
// true when the columns of v lie in the column span of basis
bool in_span(const Matrix& basis, const Matrix& v);

// monic characteristic polynomial det(xI - m), coefficients low to high
std::vector<Scalar> char_poly(const Matrix& m);

} // namespace slocc

#endif
