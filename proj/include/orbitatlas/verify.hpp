#ifndef ORBITATLAS_VERIFY_HPP
#define ORBITATLAS_VERIFY_HPP

#include "orbitatlas/isotropic.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orbitatlas {

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    int max_rank = 8;
    std::size_t trials_per_orbit = 200;
    /// (N, k) contexts for the randomized invariance suite.
    std::vector<std::pair<std::size_t, std::size_t>> contexts = {{3, 2}, {4, 3}};
    bool run_cominuscule = true;
    bool run_isotropic = true;
    /// Fault injection for exercising the harness itself: "dim-sign" flips a
    /// sign in the suite's reference dimension formula.
    std::string inject_fault;
    unsigned threads = 0; // 0 = hardware default; ORBIT_ATLAS_THREADS caps it
};

/// Effective worker count after applying the ORBIT_ATLAS_THREADS cap.
unsigned thread_budget(unsigned requested);

/// Table cross-checks for the cominuscule families (cascade lengths against
/// the closed forms and the exhaustive search), randomized group-invariance
/// and degeneration-witness suites for the isotropic contexts, and the
/// symbolic dimension identities.
std::vector<SuiteResult> run_verify(const VerifyOptions& options);

nlohmann::ordered_json verify_report(const std::vector<SuiteResult>& results);
bool all_passed(const std::vector<SuiteResult>& results);

/// All minimal-move pairs (lower, upper) between valid triplets.
std::vector<std::pair<OrbitTriplet, OrbitTriplet>> minimal_move_pairs(const IsoContext& ctx);

} // namespace orbitatlas

#endif
