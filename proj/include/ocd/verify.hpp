#pragma once

#include "ocd/search.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ocd {

struct CheckItem {
    std::string name;
    bool passed = false;
    // Values observed; for failures this is the counterexample.
    nlohmann::json detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckItem> items;

    bool all_passed() const;
    int failures() const;
};

// Caps for the exhaustive suites.
inline constexpr int kFamiliesMaxN = 14;
inline constexpr int kLemmaSuiteMaxN = 8;
inline constexpr int kClaimsMaxVars = 4;
inline constexpr int kClaimsMaxClauses = 6;

struct FamilySuiteParams {
    int max_n = 12;
    int galaxies = 30;          // random galaxies of order 4..10
    int non_galaxies = 100;     // random connected non-galaxies of order 4..6
    std::uint64_t seed = 1;
};

struct ClaimsSuiteParams {
    int vars = 3;
    int max_clauses = 3;        // each sample draws m uniformly from 1..max_clauses
    int samples = 25;
    int unsat_samples = 5;      // saturated unsatisfiable instances
    bool include_worked_example = true;
    std::uint64_t seed = 1;
};

// Closed-form bondage numbers of K_n, C_n, P_n, gamma_tilde of P_n and C_n, and the
// galaxy characterization, all against the exact solvers.
VerifyReport verify_families(const FamilySuiteParams& p, const SearchOptions& opts = {});

// K_n minus any ceil((n+1)/2) - 1 edges stays connected, n = 3..max_n.
VerifyReport verify_lemma1(int max_n);

// Reinforcement gadget: counts, gamma_tilde = n + 1, and satisfiable <=> r_OCD = 1.
VerifyReport verify_claims3(const ClaimsSuiteParams& p, const SearchOptions& opts = {});

// Bondage gadget: counts, gamma_tilde >= 3n + 1, satisfiable <=> gamma_tilde = 3n + 1,
// single removals stay <= 3n + 2, satisfiable <=> b_OCD = 1, and the witness structure.
VerifyReport verify_claims5(const ClaimsSuiteParams& p, const SearchOptions& opts = {});

} // namespace ocd
