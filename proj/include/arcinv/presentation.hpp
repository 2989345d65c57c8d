#ifndef ARCINV_PRESENTATION_HPP
#define ARCINV_PRESENTATION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arcinv/polynomial.hpp"

namespace arcinv {

struct TowerLayer {
    std::string variable;
    Polynomial poly;       // monic in `variable`, coefficients in the base ring
    std::uint32_t degree;  // degree of poly in `variable`
};

struct LayerSpec {
    std::string variable;
    std::string poly;
};

/// X = Spec S[x_1..x_n]/(f_1..f_n, extra) with S = k[base_vars] and each
/// f_i in S[x_i] monic of degree l_i >= 1. The ambient ring orders the base
/// variables first, then the tower variables.
class TriangularPresentation {
public:
    // Throws Error(Validation) when a layer is not monic in its variable,
    // has degree 0, or involves another tower variable.
    TriangularPresentation(Field field, std::vector<std::string> base_vars, const std::vector<LayerSpec>& tower,
                           const std::vector<std::string>& extra_relations = {});

    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const Ring& ring() const noexcept { return *ring_; }
    const std::vector<std::string>& base_vars() const noexcept { return base_vars_; }
    const std::vector<TowerLayer>& tower() const noexcept { return tower_; }
    const std::vector<Polynomial>& extra_relations() const noexcept { return extra_; }

    // Tower polynomials followed by the extra relations.
    std::vector<Polynomial> defining_polynomials() const;

private:
    RingPtr ring_;
    std::vector<std::string> base_vars_;
    std::vector<TowerLayer> tower_;
    std::vector<Polynomial> extra_;
};

/// S subset B subset B' with beta the coordinate projection that forgets the
/// source's additional tower variables.
class FiniteMorphismSpec {
public:
    // Throws Error(Validation) unless the source extends the target's tower.
    FiniteMorphismSpec(TriangularPresentation target, TriangularPresentation source, std::uint64_t declared_rank);

    const TriangularPresentation& target() const noexcept { return target_; }
    const TriangularPresentation& source() const noexcept { return source_; }
    std::uint64_t declared_rank() const noexcept { return declared_rank_; }

    // Layers of the source beyond the shared prefix.
    std::vector<TowerLayer> extra_layers() const;

    // beta on rational points: keep the target's coordinates.
    RationalPoint project(const RationalPoint& source_point) const;

private:
    TriangularPresentation target_;
    TriangularPresentation source_;
    std::uint64_t declared_rank_;
};

}  // namespace arcinv

#endif  // ARCINV_PRESENTATION_HPP
