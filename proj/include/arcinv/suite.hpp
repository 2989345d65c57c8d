#ifndef ARCINV_SUITE_HPP
#define ARCINV_SUITE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arcinv/hickel.hpp"
#include "arcinv/scenario.hpp"

namespace arcinv {

struct CuratedScenario {
    std::string name;
    std::string text;  // scenario JSON
};

/// Curated scenarios: cusps in characteristic 0, 2, 3, A_k for k <= 5, the
/// Whitney umbrella and two triangular towers. Each has one algebra and at
/// least three arcs centered in its singular locus.
const std::vector<CuratedScenario>& curated_scenarios();

struct SuiteCase {
    std::string scenario;
    std::string arc;
    std::size_t n = 1;  // reparametrization t -> t^n
    ArcOrder r;
    std::optional<mpz_class> rho;  // floor(r) by the formula
    OracleResult::Kind oracle_kind = OracleResult::Kind::DidNotDrop;
    std::size_t oracle = 0;
    bool homogeneous = false;  // r(phi_n) = n r(phi)
    bool pass = false;
};

struct SuiteOptions {
    std::vector<std::size_t> reparametrizations{1, 2, 3, 4, 5, 6, 7, 8};
    std::size_t max_steps = 512;
};

struct SuiteReport {
    std::vector<SuiteCase> cases;
    double seconds = 0;
    bool pass() const;
};

/// Oracle against floor(r) for every curated arc and reparametrization.
SuiteReport run_flagship_suite(const SuiteOptions& options = {});

}  // namespace arcinv

#endif  // ARCINV_SUITE_HPP
