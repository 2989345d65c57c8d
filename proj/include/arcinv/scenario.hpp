#ifndef ARCINV_SCENARIO_HPP
#define ARCINV_SCENARIO_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arcinv/arcs.hpp"
#include "arcinv/hickel.hpp"
#include "arcinv/presentation.hpp"
#include "arcinv/rees.hpp"

namespace arcinv {

struct NamedPoint {
    std::string name;
    RationalPoint point;
};

// Arc as written in the file: coefficient lists in ambient variable order.
struct ArcSpec {
    std::string name;
    std::vector<std::vector<Scalar>> coefficients;
    std::optional<std::size_t> precision;
};

struct ZariskiItem {
    std::string poly;
    std::size_t x = 0;
    std::size_t y = 1;
    std::optional<std::vector<Scalar>> fibers;  // empty: every point of F_p
};

struct MorphismScenario {
    FiniteMorphismSpec spec;
    std::vector<NamedPoint> points;  // on X'
    std::vector<ArcSpec> arcs;       // on X'
};

struct ScenarioDefaults {
    std::size_t precision = 24;
    std::size_t max_steps = default_max_steps;
};

struct Scenario {
    Field field;
    RingPtr ring;  // null when the file declares no variables
    std::vector<std::pair<std::string, Polynomial>> polynomials;
    std::vector<std::pair<std::string, ReesAlgebra>> algebras;
    std::vector<ArcSpec> arcs;
    std::vector<NamedPoint> points;
    std::vector<std::string> variety;  // polynomial names
    std::optional<std::string> hypersurface;
    std::optional<MorphismScenario> morphism;
    std::vector<ZariskiItem> zariski;
    ScenarioDefaults defaults;

    const Polynomial& polynomial(const std::string& name) const;
    std::vector<Polynomial> variety_polynomials() const;
};

struct ScenarioOptions {
    std::optional<std::uint32_t> characteristic;  // overrides "char"
};

/// Strict JSON; unknown keys and duplicate names are rejected. Syntax errors
/// are ParseError with line and column; semantic errors name the JSON path.
Scenario parse_scenario(std::string_view text, const ScenarioOptions& options = {});
Scenario load_scenario(const std::string& path, const ScenarioOptions& options = {});

/// Precision for an arc: explicit override, then the arc's own, then defaults.
std::size_t arc_precision(const ArcSpec& arc, const ScenarioDefaults& defaults,
                          std::optional<std::size_t> override_precision = std::nullopt);

/// Build the arc at the given precision; longer coefficient lists are truncated.
Arc materialize(const ArcSpec& arc, const RingPtr& ring, std::size_t precision);

}  // namespace arcinv

#endif  // ARCINV_SCENARIO_HPP
