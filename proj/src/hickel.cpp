#include "arcinv/hickel.hpp"

#include "arcinv/error.hpp"

namespace arcinv {

namespace {

std::string fresh_line_name(const Ring& ring, std::string name) {
    while (ring.index_of(name)) name += "_";
    return name;
}

Arc extend_arc(const Arc& phi, RingPtr ring) {
    std::vector<TruncatedSeries> s = phi.series();
    s.push_back(TruncatedSeries::monomial(Scalar::one(ring->field()), 1, phi.precision()));
    return Arc(std::move(ring), std::move(s));
}

// Lift of the arc to the chart: (phi_i - xi_i) / (phi_c - xi_c) off the
// chart, phi_c - xi_c on it.
Arc lift_arc(const Arc& arc, const RationalPoint& center, std::size_t chart, std::size_t floor,
             std::size_t step) {
    std::vector<TruncatedSeries> rec;
    rec.reserve(arc.series().size());
    for (const auto& s : arc.series()) rec.push_back(s.recentered());
    const TruncatedSeries& denom = rec[chart];
    std::uint64_t k = denom.order().value();
    std::size_t out_precision = arc.precision() - static_cast<std::size_t>(k);
    if (out_precision < floor) {
        throw PrecisionError("lifting the arc at step " + std::to_string(step + 1) + " leaves precision " +
                                 std::to_string(out_precision) + " below the floor " + std::to_string(floor),
                             arc.precision(), step + 1);
    }
    std::vector<TruncatedSeries> out;
    out.reserve(rec.size());
    for (std::size_t i = 0; i < rec.size(); ++i) {
        if (i == chart) {
            out.push_back(rec[i].truncated(out_precision));
        } else {
            out.push_back(rec[i].divided_by(denom));
        }
    }
    (void)center;
    return Arc(arc.ring_ptr(), std::move(out));
}

void require_start(const Arc& phi, const ReesAlgebra& g, const RationalPoint& xi) {
    require_dimension(g.ring(), xi);
    if (!(phi.ring() == g.ring())) throw Error(ErrorKind::DimensionMismatch, "arc and algebra over different rings");
    if (!(phi.center() == xi)) {
        throw Error(ErrorKind::Precondition, "arc center " + phi.center().to_string() + " differs from " +
                                                 xi.to_string());
    }
    if (!in_singular_locus(g, xi)) {
        throw Error(ErrorKind::Precondition, xi.to_string() + " is not in Sing(G) for G = " + g.to_string());
    }
}

}  // namespace

DirectedBlowupState init_state(const Arc& phi, const ReesAlgebra& g, const RationalPoint& xi,
                               const DirectedOptions& options) {
    require_start(phi, g, xi);
    ReesAlgebra ext = extend_with_line(g, fresh_line_name(g.ring(), options.line_variable));
    Arc arc = extend_arc(phi, ext.ring_ptr());
    RationalPoint center = arc.center();
    return DirectedBlowupState{std::move(ext), std::move(arc), std::move(center), 0, {}};
}

std::optional<std::size_t> choose_chart(const Arc& arc) {
    std::optional<std::size_t> best;
    std::uint64_t best_order = 0;
    for (std::size_t i = 0; i < arc.series().size(); ++i) {
        OrderValue o = arc[i].recentered().order();
        if (!o.is_finite() || o.value() == 0) continue;
        if (!best || o.value() < best_order) {
            best = i;
            best_order = o.value();
        }
    }
    return best;
}

DirectedBlowupState directed_step(const DirectedBlowupState& state, const DirectedOptions& options) {
    if (!in_singular_locus(state.algebra, state.center)) {
        throw Error(ErrorKind::Precondition, "center " + state.center.to_string() + " at step " +
                                                 std::to_string(state.step) + " is not in Sing(G)");
    }
    auto chart = choose_chart(state.arc);
    if (!chart) {
        throw PrecisionError("arc is constant to precision " + std::to_string(state.arc.precision()) + " at step " +
                                 std::to_string(state.step),
                             state.arc.precision(), state.step + 1);
    }
    ReesAlgebra next = transform_blowup(state.algebra, state.center, *chart);
    Arc lifted = lift_arc(state.arc, state.center, *chart, options.precision_floor, state.step);
    RationalPoint center = lifted.center();
    std::vector<std::size_t> charts = state.charts;
    charts.push_back(*chart);
    return DirectedBlowupState{std::move(next), std::move(lifted), std::move(center), state.step + 1,
                               std::move(charts)};
}

StepRecord describe(const DirectedBlowupState& state) {
    StepRecord r;
    r.step = state.step;
    if (!state.charts.empty()) r.chart = state.charts.back();
    r.center = state.center;
    for (const auto& gen : state.algebra.generators()) r.generator_orders.push_back(poly_order_at(gen.poly, state.center));
    r.order = order_at_point(state.algebra, state.center);
    r.in_sing = in_singular_locus(state.algebra, state.center);
    return r;
}

std::string to_string(OracleResult::Kind kind) {
    switch (kind) {
        case OracleResult::Kind::Dropped: return "Dropped";
        case OracleResult::Kind::DidNotDrop: return "DidNotDrop";
        case OracleResult::Kind::PrecisionExhausted: return "PrecisionExhausted";
    }
    return "?";
}

OracleResult persistence_oracle(const Arc& phi, const ReesAlgebra& g, const RationalPoint& xi, std::size_t max_steps,
                                const DirectedOptions& options) {
    OracleResult out;
    DirectedBlowupState state = init_state(phi, g, xi, options);
    out.trace.push_back(describe(state));
    while (state.step < max_steps) {
        try {
            state = directed_step(state, options);
        } catch (const PrecisionError& e) {
            out.kind = OracleResult::Kind::PrecisionExhausted;
            out.steps = state.step;
            // retry from the top, so double what the caller passed in
            out.retry_precision = std::max(e.retry_precision(), 2 * phi.precision());
            out.message = e.what();
            return out;
        }
        StepRecord rec = describe(state);
        bool left = !rec.in_sing;
        out.trace.push_back(std::move(rec));
        if (left) {
            out.kind = OracleResult::Kind::Dropped;
            out.steps = state.step;
            return out;
        }
    }
    out.kind = OracleResult::Kind::DidNotDrop;
    out.steps = state.step;
    out.message = "still in the top stratum after " + std::to_string(max_steps) +
                  " blow-ups; the generic point of the arc may lie in it";
    return out;
}

std::optional<std::size_t> NashSequence::first_drop() const {
    for (std::size_t i = 1; i < multiplicities.size(); ++i) {
        if (multiplicities[i] < multiplicities[0]) return i;
    }
    return std::nullopt;
}

NashSequence nash_sequence_hypersurface(const Arc& phi, const Polynomial& f, const RationalPoint& xi,
                                        std::size_t max_steps, const DirectedOptions& options) {
    require_dimension(f.ring(), xi);
    if (!(phi.ring() == f.ring())) throw Error(ErrorKind::DimensionMismatch, "arc and polynomial over different rings");
    std::vector<Polynomial> single{f};
    VarietyCheck on = validate_on_variety(phi, single);
    if (!on) {
        throw Error(ErrorKind::Precondition, "arc is not on V(" + f.to_string() + "): coefficient of t^" +
                                                 std::to_string(*on.coefficient) + " is nonzero");
    }
    if (!(phi.center() == xi)) {
        throw Error(ErrorKind::Precondition, "arc center " + phi.center().to_string() + " differs from " +
                                                 xi.to_string());
    }
    OrderValue m0 = poly_order_at(f, xi);
    if (!m0.is_finite() || m0.value() < 2) {
        throw Error(ErrorKind::Precondition, "multiplicity of " + f.to_string() + " at " + xi.to_string() + " is " +
                                                 m0.to_string() + "; the Nash sequence needs m_0 >= 2");
    }
    RingPtr ring = make_ring(f.field(), [&] {
        auto v = f.ring().variables();
        v.push_back(fresh_line_name(f.ring(), options.line_variable));
        return v;
    }());
    Polynomial strict = f.rebased(ring);
    Arc arc = extend_arc(phi, ring);
    RationalPoint center = arc.center();

    NashSequence out;
    out.multiplicities.push_back(m0.value());
    for (std::size_t step = 0; step < max_steps; ++step) {
        auto chart = choose_chart(arc);
        try {
            if (!chart) {
                throw PrecisionError("arc is constant to precision " + std::to_string(arc.precision()),
                                     arc.precision(), step + 1);
            }
            Arc lifted = lift_arc(arc, center, *chart, options.precision_floor, step);
            Polynomial pulled = blowup_pullback(strict, center, *chart);
            strict = pulled.divide_by_variable_power(*chart, pulled.variable_power_dividing(*chart));
            arc = std::move(lifted);
        } catch (const PrecisionError& e) {
            out.kind = OracleResult::Kind::PrecisionExhausted;
            // retry from the top, so double what the caller passed in
            out.retry_precision = std::max(e.retry_precision(), 2 * phi.precision());
            out.message = e.what();
            return out;
        }
        out.charts.push_back(*chart);
        center = arc.center();
        OrderValue m = poly_order_at(strict, center);
        if (!m.is_finite()) throw Error(ErrorKind::Precondition, "strict transform vanished identically");
        if (m.value() > out.multiplicities.back()) {
            throw Error(ErrorKind::Validation, "Nash multiplicity increased from " +
                                                   std::to_string(out.multiplicities.back()) + " to " +
                                                   std::to_string(m.value()));
        }
        out.multiplicities.push_back(m.value());
        if (m.value() < out.multiplicities.front()) {
            out.kind = OracleResult::Kind::Dropped;
            return out;
        }
    }
    out.kind = OracleResult::Kind::DidNotDrop;
    out.message = "multiplicity did not drop within " + std::to_string(max_steps) + " blow-ups";
    return out;
}

}  // namespace arcinv
