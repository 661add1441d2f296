#ifndef SLOCC_SYMMETRY_HPP
#define SLOCC_SYMMETRY_HPP

#include "slocc/canon.hpp"

#include <string>
#include <vector>

namespace slocc {

struct SymmetryParams {
    Scalar z1{0}, z2{0}, z3{0}, d2{1}, d3{1};

    static SymmetryParams identity() { return {}; }
    bool is_identity() const;
    // T = T_EJ(z1) T_EA(z2) T_JA(z3) diag(1, d2, d3)
    Matrix t() const;
    // inverse of t() for upper-triangular T with t11 = 1
    static SymmetryParams from_t(const Matrix& t);
    friend bool operator==(const SymmetryParams&, const SymmetryParams&) = default;
};

enum class Stage { Rescale, JA, EA, EJ };
inline const std::vector<Stage> canonical_order{Stage::Rescale, Stage::JA, Stage::EA, Stage::EJ};

Matrix t_ej(const Scalar& z1);
Matrix t_ea(const Scalar& z2);
Matrix t_ja(const Scalar& z3);
Matrix t_rescale(const Scalar& d2, const Scalar& d3);

// Canonical form of the state (sum_j T_0j S_j, sum_j T_1j S_j, sum_j T_2j S_j)
// with S = (E, J, A) realized from cf.  Throws DegenerateParameter when the
// new first slot is singular or, for a single block, the new J slot loses its
// Jordan structure.
CanonicalForm apply_transform(const CanonicalForm& cf, const Matrix& t);

CanonicalForm apply_T_EJ(const CanonicalForm& cf, const Scalar& z1);
CanonicalForm apply_T_EA(const CanonicalForm& cf, const Scalar& z2);
CanonicalForm apply_T_JA(const CanonicalForm& cf, const Scalar& z3);
CanonicalForm apply_rescale(const CanonicalForm& cf, const Scalar& d2, const Scalar& d3);
CanonicalForm apply_all(const CanonicalForm& cf, const SymmetryParams& sp,
                        const std::vector<Stage>& order = canonical_order);
// one-shot application of sp.t()
CanonicalForm apply_params(const CanonicalForm& cf, const SymmetryParams& sp);

Scalar mobius_2nn(const Scalar& lambda, const Scalar& t11, const Scalar& t12, const Scalar& t22);

enum class Verdict { Equivalent, Inequivalent, Undecided };
std::string to_string(Verdict v);

struct OrbitDecision {
    Verdict verdict = Verdict::Undecided;
    SymmetryParams witness;
    std::vector<size_t> permutation; // block k of the first form -> block permutation[k] of the second
    std::string note;
};

// Equivalent only with a verified witness.  Inequivalent only for decoupled
// forms whose block sizes differ, or when the witness equations are
// infeasible for every block matching; relative to the generated group.
OrbitDecision orbit_equivalent(const CanonicalForm& cf1, const CanonicalForm& cf2, uint64_t seed = 0);

} // namespace slocc

#endif
