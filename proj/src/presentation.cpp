#include "arcinv/presentation.hpp"

#include "arcinv/error.hpp"

namespace arcinv {

TriangularPresentation::TriangularPresentation(Field field, std::vector<std::string> base_vars,
                                               const std::vector<LayerSpec>& tower,
                                               const std::vector<std::string>& extra_relations)
    : ring_(nullptr), base_vars_(std::move(base_vars)) {
    std::vector<std::string> vars = base_vars_;
    for (const auto& layer : tower) vars.push_back(layer.variable);
    ring_ = make_ring(field, std::move(vars));
    std::size_t d = base_vars_.size();
    for (std::size_t i = 0; i < tower.size(); ++i) {
        std::size_t var = d + i;
        Polynomial f = parse_polynomial(ring_, tower[i].poly);
        for (std::size_t j = d; j < ring_->size(); ++j) {
            if (j != var && f.involves(j)) {
                throw Error(ErrorKind::Validation, "tower polynomial " + f.to_string() + " for '" +
                                                       tower[i].variable + "' involves tower variable '" +
                                                       ring_->variables()[j] + "'; layers must lie in S[" +
                                                       tower[i].variable + "]");
            }
        }
        std::uint32_t deg = f.degree_in(var);
        if (deg == 0) {
            throw Error(ErrorKind::Validation, "tower polynomial " + f.to_string() + " has degree 0 in '" +
                                                   tower[i].variable + "'");
        }
        Polynomial lead = f.coefficient_in(var, deg);
        if (!(lead == Polynomial::constant(ring_, 1))) {
            throw Error(ErrorKind::Validation,
                        "tower polynomial " + f.to_string() + " is not monic in '" + tower[i].variable + "'");
        }
        tower_.push_back({tower[i].variable, std::move(f), deg});
    }
    for (const auto& text : extra_relations) extra_.push_back(parse_polynomial(ring_, text));
}

std::vector<Polynomial> TriangularPresentation::defining_polynomials() const {
    std::vector<Polynomial> out;
    for (const auto& layer : tower_) out.push_back(layer.poly);
    out.insert(out.end(), extra_.begin(), extra_.end());
    return out;
}

FiniteMorphismSpec::FiniteMorphismSpec(TriangularPresentation target, TriangularPresentation source,
                                       std::uint64_t declared_rank)
    : target_(std::move(target)), source_(std::move(source)), declared_rank_(declared_rank) {
    if (!(target_.ring().field() == source_.ring().field())) {
        throw Error(ErrorKind::Validation, "source and target presentations over different fields");
    }
    if (target_.base_vars() != source_.base_vars()) {
        throw Error(ErrorKind::Validation, "source and target presentations have different base variables");
    }
    if (source_.tower().size() < target_.tower().size()) {
        throw Error(ErrorKind::Validation, "source tower is shorter than the target tower");
    }
    for (std::size_t i = 0; i < target_.tower().size(); ++i) {
        const auto& t = target_.tower()[i];
        const auto& s = source_.tower()[i];
        if (t.variable != s.variable || !(t.poly.rebased(source_.ring_ptr()) == s.poly)) {
            throw Error(ErrorKind::Validation, "source tower layer " + std::to_string(i + 1) +
                                                   " differs from the target layer " + t.poly.to_string());
        }
    }
    if (declared_rank_ == 0) throw Error(ErrorKind::Validation, "declared rank must be >= 1");
}

std::vector<TowerLayer> FiniteMorphismSpec::extra_layers() const {
    return {source_.tower().begin() + static_cast<std::ptrdiff_t>(target_.tower().size()), source_.tower().end()};
}

RationalPoint FiniteMorphismSpec::project(const RationalPoint& source_point) const {
    require_dimension(source_.ring(), source_point);
    const auto& c = source_point.coordinates();
    return RationalPoint(std::vector<Scalar>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(target_.ring().size())));
}

}  // namespace arcinv
