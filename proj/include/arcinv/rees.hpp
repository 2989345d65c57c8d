#ifndef ARCINV_REES_HPP
#define ARCINV_REES_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "arcinv/order.hpp"
#include "arcinv/polynomial.hpp"

namespace arcinv {

struct WeightedGenerator {
    Polynomial poly;
    std::uint32_t weight;

    friend bool operator==(const WeightedGenerator&, const WeightedGenerator&) = default;
};

/// G = R[f_1 W^{n_1}, ..., f_r W^{n_r}] over a polynomial ring R.
///
/// Generators are nonzero and carry weight >= 1. The list is kept in input
/// order; no simplification is applied, so unit generators survive and show
/// up through the singular-locus test.
class ReesAlgebra {
public:
    explicit ReesAlgebra(RingPtr ring) : ring_(std::move(ring)) {}
    // Throws Error(Validation) on a zero generator, weight 0 or a foreign ring.
    ReesAlgebra(RingPtr ring, std::vector<WeightedGenerator> generators);

    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const Ring& ring() const noexcept { return *ring_; }
    const std::vector<WeightedGenerator>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    std::uint32_t max_weight() const;

    void add(WeightedGenerator g);

    std::string to_string() const;

    friend bool operator==(const ReesAlgebra&, const ReesAlgebra&) = default;

private:
    RingPtr ring_;
    std::vector<WeightedGenerator> gens_;
};

/// Hironaka's order ord_xi(G) = min_i nu_xi(f_i) / n_i.
RationalOrInfinity order_at_point(const ReesAlgebra& g, const RationalPoint& xi);

/// nu_xi(f_i) >= n_i for every generator.
bool in_singular_locus(const ReesAlgebra& g, const RationalPoint& xi);

struct EnumerationBudget {
    std::size_t max_dimension = 4;
    std::uint64_t max_points = 1u << 20;
};

/// Defaults overridden by ARCINV_ENUM_MAX_POINTS / ARCINV_ENUM_MAX_DIM.
EnumerationBudget enumeration_budget_from_env();

/// Brute force over the full F_p grid. Throws Error(Budget) past the budget
/// and Error(InvalidArgument) in characteristic 0.
std::set<RationalPoint> singular_locus_enumerate(const ReesAlgebra& g,
                                                 const EnumerationBudget& budget = {});

/// Adds (D^alpha f, n - |alpha|) for every generator (f, n) and every Hasse
/// multi-index with 0 < |alpha| < n. Zero results are dropped; exact
/// duplicates are removed.
ReesAlgebra diff_saturate(const ReesAlgebra& g);

/// Monic generators, sorted, deduplicated. Two algebras with equal canonical
/// forms have the same generator sets up to units.
ReesAlgebra canonicalize(const ReesAlgebra& g);

/// Same generators over the ring with one extra trailing variable.
ReesAlgebra extend_with_line(const ReesAlgebra& g, const std::string& name);

/// Weighted transform under the point blow-up at `center`, in the chart
/// where x_chart generates the exceptional divisor: translate the center to
/// the origin, substitute x_i = x_chart x_i' (i != chart), divide each
/// generator by x_chart^{weight}.
ReesAlgebra transform_blowup(const ReesAlgebra& g, const RationalPoint& center, std::size_t chart);

/// The pullback step of transform_blowup without the division.
Polynomial blowup_pullback(const Polynomial& f, const RationalPoint& center, std::size_t chart);

}  // namespace arcinv

#endif  // ARCINV_REES_HPP
