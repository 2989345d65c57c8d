#include "arcinv/rees.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "arcinv/error.hpp"

namespace arcinv {

ReesAlgebra::ReesAlgebra(RingPtr ring, std::vector<WeightedGenerator> generators) : ring_(std::move(ring)) {
    for (auto& g : generators) add(std::move(g));
}

void ReesAlgebra::add(WeightedGenerator g) {
    if (g.weight == 0) {
        throw Error(ErrorKind::Validation, "generator " + g.poly.to_string() + " has weight 0; weights must be >= 1");
    }
    if (g.poly.is_zero()) throw Error(ErrorKind::Validation, "zero polynomial is not a valid generator");
    if (!(g.poly.ring() == *ring_)) throw Error(ErrorKind::Validation, "generator over a different ring");
    gens_.push_back(std::move(g));
}

std::uint32_t ReesAlgebra::max_weight() const {
    std::uint32_t w = 0;
    for (const auto& g : gens_) w = std::max(w, g.weight);
    return w;
}

std::string ReesAlgebra::to_string() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i != 0) os << ", ";
        os << "(" << gens_[i].poly.to_string() << ", " << gens_[i].weight << ")";
    }
    os << ">";
    return os.str();
}

RationalOrInfinity order_at_point(const ReesAlgebra& g, const RationalPoint& xi) {
    require_dimension(g.ring(), xi);
    RationalOrInfinity best = RationalOrInfinity::infinity();
    for (const auto& gen : g.generators()) {
        OrderValue nu = poly_order_at(gen.poly, xi);
        RationalOrInfinity q = RationalOrInfinity::ratio(nu.value(), gen.weight);
        if (q < best) best = q;
        if (best == RationalOrInfinity()) break;
    }
    return best;
}

bool in_singular_locus(const ReesAlgebra& g, const RationalPoint& xi) {
    require_dimension(g.ring(), xi);
    for (const auto& gen : g.generators()) {
        if (!poly_order_at_least(gen.poly, xi, gen.weight)) return false;
    }
    return true;
}

EnumerationBudget enumeration_budget_from_env() {
    EnumerationBudget b;
    if (const char* v = std::getenv("ARCINV_ENUM_MAX_POINTS")) b.max_points = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("ARCINV_ENUM_MAX_DIM")) b.max_dimension = std::strtoull(v, nullptr, 10);
    return b;
}

std::set<RationalPoint> singular_locus_enumerate(const ReesAlgebra& g, const EnumerationBudget& budget) {
    const Field& field = g.ring().field();
    if (!field.is_prime_field()) {
        throw Error(ErrorKind::InvalidArgument, "singular locus enumeration needs a finite field");
    }
    std::size_t dim = g.ring().size();
    if (dim > budget.max_dimension) {
        throw Error(ErrorKind::Budget, "ambient dimension " + std::to_string(dim) + " exceeds bound " +
                                           std::to_string(budget.max_dimension));
    }
    std::uint64_t p = field.characteristic();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        total *= p;
        if (total > budget.max_points) {
            throw Error(ErrorKind::Budget, "grid of " + field.name() + "^" + std::to_string(dim) +
                                               " exceeds point budget " + std::to_string(budget.max_points));
        }
    }
    std::set<RationalPoint> out;
    std::vector<std::uint64_t> digits(dim, 0);
    for (std::uint64_t n = 0; n < total; ++n) {
        std::uint64_t rest = n;
        std::vector<Scalar> coords;
        coords.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            coords.push_back(Scalar::from_int(field, static_cast<long>(rest % p)));
            rest /= p;
        }
        RationalPoint pt(std::move(coords));
        if (in_singular_locus(g, pt)) out.insert(std::move(pt));
    }
    return out;
}

ReesAlgebra diff_saturate(const ReesAlgebra& g) {
    ReesAlgebra out(g.ring_ptr());
    auto seen = [&out](const WeightedGenerator& w) {
        return std::find(out.generators().begin(), out.generators().end(), w) != out.generators().end();
    };
    // All original generators first, then derivatives, so the input order survives.
    for (const auto& gen : g.generators()) {
        if (!seen(gen)) out.add(gen);
    }
    std::size_t n = g.ring().size();
    for (const auto& gen : g.generators()) {
        if (gen.weight < 2) continue;
        for (const auto& alpha : multi_indices_up_to(n, gen.weight - 1)) {
            std::uint32_t order = static_cast<std::uint32_t>(total_degree(alpha));
            if (order == 0) continue;
            Polynomial d = hasse_derivative(gen.poly, alpha);
            if (d.is_zero()) continue;
            WeightedGenerator w{std::move(d), gen.weight - order};
            if (!seen(w)) out.add(std::move(w));
        }
    }
    return out;
}

ReesAlgebra canonicalize(const ReesAlgebra& g) {
    std::vector<WeightedGenerator> gens;
    for (const auto& gen : g.generators()) gens.push_back({gen.poly.monic(), gen.weight});
    auto less = [](const WeightedGenerator& a, const WeightedGenerator& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return canonical_less(a.poly, b.poly);
    };
    std::sort(gens.begin(), gens.end(), less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return ReesAlgebra(g.ring_ptr(), std::move(gens));
}

ReesAlgebra extend_with_line(const ReesAlgebra& g, const std::string& name) {
    if (g.ring().index_of(name)) {
        throw Error(ErrorKind::InvalidArgument, "variable '" + name + "' already in the ambient ring");
    }
    std::vector<std::string> vars = g.ring().variables();
    vars.push_back(name);
    RingPtr ring = make_ring(g.ring().field(), std::move(vars));
    ReesAlgebra out(ring);
    for (const auto& gen : g.generators()) out.add({gen.poly.rebased(ring), gen.weight});
    return out;
}

Polynomial blowup_pullback(const Polynomial& f, const RationalPoint& center, std::size_t chart) {
    if (chart >= f.ring().size()) throw Error(ErrorKind::DimensionMismatch, "chart index out of range");
    Polynomial local = poly_translate(f, center);
    Polynomial out(f.ring_ptr());
    for (const auto& [e, c] : local.terms()) {
        // x_i -> x_chart x_i for i != chart is monomial: the chart exponent absorbs the others.
        Exponents r = e;
        r[chart] = static_cast<std::uint32_t>(total_degree(e));
        out.add_term(r, c);
    }
    return out;
}

ReesAlgebra transform_blowup(const ReesAlgebra& g, const RationalPoint& center, std::size_t chart) {
    require_dimension(g.ring(), center);
    if (!in_singular_locus(g, center)) {
        throw Error(ErrorKind::Precondition,
                    "blow-up center " + center.to_string() + " is not in Sing(G) for G = " + g.to_string());
    }
    ReesAlgebra out(g.ring_ptr());
    for (const auto& gen : g.generators()) {
        Polynomial pulled = blowup_pullback(gen.poly, center, chart);
        out.add({pulled.divide_by_variable_power(chart, gen.weight), gen.weight});
    }
    return out;
}

}  // namespace arcinv
