#ifndef SLOCC_CANON_HPP
#define SLOCC_CANON_HPP

#include "slocc/jordan.hpp"
#include "slocc/nilpoly.hpp"

#include <cstdint>
#include <vector>

namespace slocc {

struct TensorState {
    size_t L = 0;
    size_t N = 0;
    std::vector<Matrix> gammas;

    TensorState() = default;
    explicit TensorState(std::vector<Matrix> g);
    friend bool operator==(const TensorState&, const TensorState&) = default;
};

struct ILOTriple {
    Matrix t, p, q;
};

// Gamma'_i = sum_j T_ij P Gamma_j Q
TensorState apply_ilo(const TensorState& psi, const ILOTriple& ops);
Matrix combination(const TensorState& psi, const std::vector<Scalar>& t);

struct MaxRank {
    std::vector<Scalar> t;
    size_t r = 0;
    bool certified = false; // r == N
    size_t samples = 0;     // tuples tried
};

// small-integer sweep first, then seeded random tuples
MaxRank max_rank_combination(const TensorState& psi, uint64_t seed = 0);
// same search applied to base + sum alpha_j others_j
MaxRank max_rank_of_pencil(const Matrix& base, const std::vector<Matrix>& others, uint64_t seed = 0);

struct Reduction {
    TensorState state;
    ILOTriple ops;
    MaxRank cert;
};

Reduction full_rank_reduce_with_ops(const TensorState& psi, uint64_t seed = 0);
TensorState full_rank_reduce(const TensorState& psi, uint64_t seed = 0);
// first slot becomes diag(I_r, 0) with r the maximal rank
Reduction reduce_to_lambda(const TensorState& psi, uint64_t seed = 0);

TensorState eigen_shift(const TensorState& psi, const std::vector<Scalar>& hints = {});

// P m Q = diag(I_r, 0)
struct RankNormalForm {
    Matrix p, q;
    size_t r = 0;
};
RankNormalForm rank_normal_form(const Matrix& m);

// One equal-eigenvalue run: block sizes and the polynomial grid of A
// (entry (k,l) has order sizes[l], see poly_matrix_to_commutant).
struct RunData {
    Scalar lambda;
    std::vector<size_t> sizes;
    PolyGrid grid;
    friend bool operator==(const RunData&, const RunData&) = default;
};

struct CanonicalForm {
    JordanSpec spec;
    std::vector<PolyGrid> runs; // aligned with spec.runs()

    size_t dim() const { return spec.dim(); }
    Matrix assemble_j() const;
    Matrix assemble_a() const;
    std::vector<RunData> run_data() const;
    // every run has vanishing off-diagonal grid entries
    bool decoupled() const;
    std::vector<size_t> size_multiset() const;
    // single-block form (lambda, a_0, ..., a_{n-1})
    static CanonicalForm single_block(const Scalar& lambda, const std::vector<Scalar>& a);
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// merge runs sharing an eigenvalue, sort blocks and runs into normal order
CanonicalForm normalize_runs(std::vector<RunData> runs);

struct PairCanonical {
    CanonicalForm cf;
    Matrix witness;
};

PairCanonical commuting_pair_canonical(const Matrix& a2, const Matrix& a3, const std::vector<Scalar>& hints = {});

// Equality of classes.  Single blocks compare exactly; inside a derogatory
// run A is only fixed up to the centralizer of J, so an invertible X in
// that centralizer with X A1 = A2 X is searched for.
bool same_class(const CanonicalForm& a, const CanonicalForm& b, uint64_t seed = 0);

struct PartitionedForm {
    size_t n = 0, m = 0, i = 0;
    std::vector<Matrix> gamma_part; // n x n, slots 2..L
    std::vector<Matrix> beta_part;  // m x m, slots 2..L
    Matrix lambda_prime;            // diag(I_{m-i}, 0)
    Matrix p, q;                    // P Lambda Q = Lambda, P Gamma_j Q = gamma_j (+) beta_j
};

// psi must already carry Lambda = diag(I_r, 0), r < N, in the first slot
PartitionedForm nonfull_rank_split(const TensorState& psi);
bool beta_canonical_check(const PartitionedForm& pf, uint64_t seed = 0);

struct CanonOptions {
    uint64_t seed = 0;
    std::vector<Scalar> hints;
};

// full pipeline for a full-rank state; commuting == false leaves cf empty
struct CanonReport {
    Reduction reduction;      // first slot = identity
    bool proportional = false; // all slots multiples of E, eigen-shifted to zero
    bool commuting = true;
    std::vector<size_t> kept_slots; // slots left after dropping linear dependencies (L > 3)
    CanonicalForm cf;
    Matrix witness;
};

CanonReport canonicalize_full_rank(const TensorState& psi, const CanonOptions& opts = {});

} // namespace slocc

#endif
