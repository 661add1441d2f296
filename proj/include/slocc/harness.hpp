#ifndef SLOCC_HARNESS_HPP
#define SLOCC_HARNESS_HPP

#include "slocc/symmetry.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace slocc {

struct ProfileEntry {
    std::optional<Scalar> lambda; // drawn when empty
    size_t size = 1;
};

struct GenConfig {
    uint64_t seed = 0;
    size_t N = 0;
    size_t L = 3;
    std::vector<ProfileEntry> block_profile;
    long coefficient_bound = 9;
    // zero off-diagonal grid entries in derogatory runs
    bool decoupled = false;
};

// |num|, |den| <= bound
Scalar random_rational(std::mt19937_64& rng, long bound);
Scalar random_nonzero(std::mt19937_64& rng, long bound);

// Constant terms inside a group of equal-size blocks of one run are kept
// upper triangular so that the eigenvalues of A stay in the field.
CanonicalForm gen_canonical(const GenConfig& cfg);

enum class IloFamily { general, upper_unitriangular_T };
ILOTriple gen_ilo(const GenConfig& cfg, IloFamily family);
SymmetryParams gen_params(std::mt19937_64& rng, long bound);

// (E, J, A) as explicit matrices
TensorState realize(const CanonicalForm& cf);
CanonicalForm oracle_recanonicalize(const CanonicalForm& cf, const ILOTriple& ops);

std::string profile_str(const CanonicalForm& cf);

// one line of the machine-readable trial report
struct Trial {
    uint64_t seed = 0;
    std::string profile;
    std::string verdict; // pass, fail, redraw counts are kept per suite
    std::string detail;
};

struct SuiteReport {
    std::string name;
    size_t passed = 0, failed = 0, redraws = 0;
    double seconds = 0;
    std::vector<Trial> trials;
    bool ok() const { return failed == 0 && passed > 0; }
};

struct SuiteOptions {
    uint64_t seed = 0;
    unsigned jobs = 1;
    size_t count = 0; // 0 = suite default
};

using Suite = std::function<SuiteReport(const SuiteOptions&)>;

SuiteReport suite_golden(const SuiteOptions& o);
SuiteReport suite_closed_forms(const SuiteOptions& o);
SuiteReport suite_mobius(const SuiteOptions& o);
SuiteReport suite_oracle(const SuiteOptions& o);
SuiteReport suite_orbit(const SuiteOptions& o);
SuiteReport suite_commutant(const SuiteOptions& o);
SuiteReport suite_nilpoly(const SuiteOptions& o);
SuiteReport suite_split(const SuiteOptions& o);

struct NamedSuite {
    std::string name;
    Suite run;
};
const std::vector<NamedSuite>& all_suites();
// suites selected by a profile name; "all" selects everything
std::vector<NamedSuite> suites_for(const std::string& profile);

uint64_t derive_seed(uint64_t seed, uint64_t index);

} // namespace slocc

#endif
