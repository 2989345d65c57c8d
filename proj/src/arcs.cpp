#include "arcinv/arcs.hpp"

#include <algorithm>
#include <sstream>

#include "arcinv/error.hpp"

namespace arcinv {

Arc::Arc(RingPtr ring, std::vector<TruncatedSeries> series) : ring_(std::move(ring)), series_(std::move(series)) {
    if (series_.size() != ring_->size()) {
        throw Error(ErrorKind::DimensionMismatch, "arc has " + std::to_string(series_.size()) +
                                                      " series for " + std::to_string(ring_->size()) +
                                                      " ambient variables");
    }
    for (const auto& s : series_) {
        if (s.precision() != series_.front().precision()) {
            throw Error(ErrorKind::Precision, "arc series must share one precision");
        }
        if (!(s.field() == ring_->field())) throw Error(ErrorKind::FieldMismatch, "arc series over another field");
    }
}

Arc Arc::from_coefficients(RingPtr ring, const std::vector<std::vector<Scalar>>& coefficients,
                           std::size_t precision) {
    std::vector<TruncatedSeries> series;
    for (const auto& c : coefficients) series.emplace_back(ring->field(), c, precision);
    return Arc(std::move(ring), std::move(series));
}

RationalPoint Arc::center() const {
    std::vector<Scalar> c;
    c.reserve(series_.size());
    for (const auto& s : series_) c.push_back(s.constant_term());
    return RationalPoint(std::move(c));
}

Arc Arc::truncated(std::size_t precision) const {
    std::vector<TruncatedSeries> s;
    for (const auto& x : series_) s.push_back(x.truncated(precision));
    return Arc(ring_, std::move(s));
}

std::string Arc::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < series_.size(); ++i) {
        if (i != 0) os << ", ";
        os << ring_->variables()[i] << " = " << series_[i].to_string();
    }
    os << ")";
    return os.str();
}

VarietyCheck validate_on_variety(const Arc& arc, std::span<const Polynomial> defining) {
    for (std::size_t i = 0; i < defining.size(); ++i) {
        if (!(defining[i].ring() == arc.ring())) {
            throw Error(ErrorKind::DimensionMismatch, "defining polynomial over a different ring than the arc");
        }
        TruncatedSeries s = series_eval(defining[i], arc.series());
        OrderValue o = s.order();
        if (o.is_finite()) return VarietyCheck{false, i, static_cast<std::size_t>(o.value())};
    }
    return VarietyCheck{};
}

OrderValue nu_t(const Arc& arc, const RationalPoint& xi) {
    require_dimension(arc.ring(), xi);
    if (!(arc.center() == xi)) {
        throw Error(ErrorKind::Precondition,
                    "arc center " + arc.center().to_string() + " differs from " + xi.to_string());
    }
    std::optional<std::uint64_t> best;
    for (const auto& s : arc.series()) {
        OrderValue o = s.recentered().order();
        if (o.is_finite()) best = best ? std::min(*best, o.value()) : o.value();
    }
    return best ? OrderValue::finite(*best) : OrderValue::inconclusive(arc.precision());
}

ArcOrder ord_rees_along_arc(const Arc& arc, const ReesAlgebra& g) {
    if (!(g.ring() == arc.ring())) throw Error(ErrorKind::DimensionMismatch, "algebra and arc over different rings");
    std::optional<mpq_class> witnessed;
    std::optional<mpq_class> bound;
    for (const auto& gen : g.generators()) {
        OrderValue o = series_eval(gen.poly, arc.series()).order();
        mpq_class q(mpz_class(o.value()), mpz_class(gen.weight));
        q.canonicalize();
        auto& slot = o.is_finite() ? witnessed : bound;
        if (!slot || q < *slot) slot = q;
    }
    if (!witnessed && !bound) return ArcOrder::infinity();
    if (witnessed && (!bound || *witnessed <= *bound)) return ArcOrder::finite(*witnessed);
    mpq_class lower = witnessed ? std::min(*witnessed, *bound) : *bound;
    return ArcOrder::inconclusive(lower, arc.precision());
}

Arc reparametrize(const Arc& arc, std::size_t n, std::size_t max_precision) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "reparametrization exponent must be at least 1");
    std::size_t out = n * (arc.precision() - 1) + 1;
    if (out > max_precision) {
        throw Error(ErrorKind::Budget, "reparametrized precision " + std::to_string(out) + " exceeds budget " +
                                           std::to_string(max_precision));
    }
    std::vector<TruncatedSeries> s;
    for (const auto& x : arc.series()) s.push_back(x.substitute_power(n));
    return Arc(arc.ring_ptr(), std::move(s));
}

PersistenceReport persistence_invariants(const Arc& arc, const ReesAlgebra& g, const RationalPoint& xi) {
    if (!in_singular_locus(g, xi)) {
        throw Error(ErrorKind::Precondition, "persistence is only defined at points of Sing(G); " +
                                                 xi.to_string() + " is not one");
    }
    PersistenceReport rep;
    rep.nu_t = nu_t(arc, xi);
    rep.r = ord_rees_along_arc(arc, g);
    if (!rep.r.is_finite() || !rep.nu_t.is_finite()) {
        rep.inconclusive = true;
        rep.witness_precision = arc.precision();
        rep.retry_precision = 2 * arc.precision();
        rep.note = "all evaluations vanish to precision " + std::to_string(arc.precision()) +
                   ": the generic point of the arc may lie in the top multiplicity stratum";
        return rep;
    }
    mpq_class nu(mpz_class(rep.nu_t.value()));
    RationalOrInfinity r(rep.r.value());
    rep.rho = r.floor();
    rep.r_bar = mpq_class(rep.r.value() / nu);
    rep.r_bar->canonicalize();
    rep.rho_bar = mpq_class(mpq_class(*rep.rho) / nu);
    rep.rho_bar->canonicalize();
    return rep;
}

Arc pushforward(const Arc& source_arc, const FiniteMorphismSpec& spec) {
    const auto& source = spec.source();
    if (!(source_arc.ring() == source.ring())) {
        throw Error(ErrorKind::DimensionMismatch, "arc is not over the source ambient space");
    }
    auto defining = source.defining_polynomials();
    VarietyCheck check = validate_on_variety(source_arc, defining);
    if (!check) {
        throw Error(ErrorKind::Precondition, "arc is not on the source variety: " +
                                                 defining[*check.polynomial].to_string() +
                                                 " has a nonzero coefficient at t^" +
                                                 std::to_string(*check.coefficient));
    }
    std::size_t keep = spec.target().ring().size();
    std::vector<TruncatedSeries> s(source_arc.series().begin(),
                                   source_arc.series().begin() + static_cast<std::ptrdiff_t>(keep));
    return Arc(spec.target().ring_ptr(), std::move(s));
}

}  // namespace arcinv
