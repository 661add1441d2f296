#ifndef SLOCC_JORDAN_HPP
#define SLOCC_JORDAN_HPP

#include "slocc/matrix.hpp"

#include <vector>

namespace slocc {

struct JordanBlock {
    Scalar lambda;
    size_t size = 1;
    friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

// range [first, first + count) of blocks sharing one eigenvalue
struct Run {
    size_t first = 0;
    size_t count = 0;
};

struct JordanSpec {
    std::vector<JordanBlock> blocks;

    size_t dim() const;
    std::vector<Run> runs() const;
    std::vector<size_t> offsets() const;
    // runs ordered by lambda, sizes non-increasing inside a run
    bool normalized() const;
    friend bool operator==(const JordanSpec&, const JordanSpec&) = default;
};

Matrix assemble_jordan(const JordanSpec& spec);

std::vector<Scalar> eigenvalues_in_field(const Matrix& m, const std::vector<Scalar>& hints = {});

struct JordanDecomposition {
    Matrix s;
    JordanSpec spec;
};

// inverse(s) * m * s == assemble_jordan(spec)
JordanDecomposition jordan_decompose(const Matrix& m, const std::vector<Scalar>& hints = {});

std::vector<Matrix> commutant_basis(const JordanSpec& spec);
size_t commutant_dimension(const JordanSpec& spec);

} // namespace slocc

#endif
