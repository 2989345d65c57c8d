#ifndef ARCINV_HICKEL_HPP
#define ARCINV_HICKEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arcinv/arcs.hpp"
#include "arcinv/rees.hpp"

namespace arcinv {

inline constexpr std::size_t default_max_steps = 64;
inline constexpr std::size_t default_precision_floor = 4;

struct StepRecord {
    std::size_t step = 0;
    std::optional<std::size_t> chart;  // chart used to reach this state; none for step 0
    RationalPoint center;
    std::vector<OrderValue> generator_orders;  // nu at the center, per generator
    RationalOrInfinity order;                  // ord_center(G_i)
    bool in_sing = false;
};

/// One node of the directed blow-up sequence: the transform G_i, the lifted
/// arc Gamma_i and its center xi_i.
struct DirectedBlowupState {
    ReesAlgebra algebra;
    Arc arc;
    RationalPoint center;
    std::size_t step = 0;
    std::vector<std::size_t> charts;
};

struct DirectedOptions {
    std::size_t precision_floor = default_precision_floor;
    std::string line_variable = "s";  // name of the A^1 factor; made unique if taken
};

/// X_0 = X x A^1, Gamma_0 = (phi, t), xi_0 = (xi, 0).
DirectedBlowupState init_state(const Arc& phi, const ReesAlgebra& g, const RationalPoint& xi,
                               const DirectedOptions& options = {});

/// Blow up the current center in the chart of the lifted arc and lift.
/// Throws Error(Precondition) if the center already left Sing, PrecisionError
/// when the arc is constant to precision or the lift would fall below the floor.
DirectedBlowupState directed_step(const DirectedBlowupState& state, const DirectedOptions& options = {});

// Chart for the next blow-up: minimal positive order of the recentered arc,
// lowest index on ties. Empty if every coordinate is constant to precision.
std::optional<std::size_t> choose_chart(const Arc& arc);

StepRecord describe(const DirectedBlowupState& state);

struct OracleResult {
    enum class Kind { Dropped, DidNotDrop, PrecisionExhausted };

    Kind kind = Kind::DidNotDrop;
    std::size_t steps = 0;            // the persistence when Dropped, else steps completed
    std::size_t retry_precision = 0;  // for PrecisionExhausted
    std::string message;
    std::vector<StepRecord> trace;

    bool dropped() const noexcept { return kind == Kind::Dropped; }
};

std::string to_string(OracleResult::Kind kind);

/// Least i >= 1 with xi_i outside Sing(G_i) along the sequence directed by phi.
/// G should be differentially saturated. Throws Error(Precondition) unless
/// xi is the center of phi and lies in Sing(G).
OracleResult persistence_oracle(const Arc& phi, const ReesAlgebra& g, const RationalPoint& xi,
                                std::size_t max_steps = default_max_steps, const DirectedOptions& options = {});

struct NashSequence {
    std::vector<std::uint64_t> multiplicities;  // m_0 >= m_1 >= ...
    OracleResult::Kind kind = OracleResult::Kind::DidNotDrop;
    std::size_t retry_precision = 0;
    std::string message;
    std::vector<std::size_t> charts;

    // Index of the first strict drop, if any.
    std::optional<std::size_t> first_drop() const;
};

/// Multiplicities of the strict transforms of V(F) x A^1 along the directed
/// sequence. Needs phi on V(F) and nu_xi(F) >= 2.
NashSequence nash_sequence_hypersurface(const Arc& phi, const Polynomial& f, const RationalPoint& xi,
                                        std::size_t max_steps = default_max_steps,
                                        const DirectedOptions& options = {});

}  // namespace arcinv

#endif  // ARCINV_HICKEL_HPP
