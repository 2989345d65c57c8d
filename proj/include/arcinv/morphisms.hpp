#ifndef ARCINV_MORPHISMS_HPP
#define ARCINV_MORPHISMS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arcinv/arcs.hpp"
#include "arcinv/hickel.hpp"
#include "arcinv/presentation.hpp"
#include "arcinv/rees.hpp"

namespace arcinv {

/// Diff(<(f_1, l_1), ..., (f_n, l_n)>) over (base vars, tower vars).
/// Extra relations are not part of the algebra.
ReesAlgebra local_presentation(const TriangularPresentation& p);

/// Product of the degrees of the extra layers. Throws Error(Validation) when
/// it differs from the declared rank.
std::uint64_t generic_rank(const FiniteMorphismSpec& spec);

struct NamedArc {
    std::string id;
    Arc arc;
};

struct CheckItem {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct LocusComparison {
    std::uint32_t characteristic = 0;
    std::set<RationalPoint> source_sing;  // Sing(G_X')
    std::set<RationalPoint> preimage;     // beta^-1(Sing G_X) on X'
    bool equal() const { return source_sing == preimage; }
};

struct TransversalityReport {
    std::vector<CheckItem> items;
    std::optional<LocusComparison> locus;  // over F_p only
    bool pass() const;
};

/// Sing membership of each declared source point and of its image, nu_t
/// preservation along each arc, and over F_p the brute-force locus comparison.
TransversalityReport transversality_check(const FiniteMorphismSpec& spec, const std::vector<RationalPoint>& points,
                                          const std::vector<NamedArc>& arcs,
                                          const EnumerationBudget& budget = enumeration_budget_from_env());

struct FiberFactor {
    std::vector<Scalar> coefficients;  // monic, constant term first
    std::uint32_t exponent = 0;
    std::size_t degree() const { return coefficients.size() - 1; }
};

struct ZariskiReport {
    Scalar fiber;
    std::vector<FiberFactor> factors;
    std::uint64_t sum = 0;      // sum of exponent * degree
    std::uint32_t degree = 0;   // deg_y f
    bool holds() const { return sum == degree; }
};

std::uint64_t factor_budget_from_env();

/// Factor f(a, y) and compare sum e_i [k_i : k] with deg_y f. f must be monic
/// in y and involve only x and y. Characteristic 0 needs the fiber to split
/// into rational linear factors up to one irreducible factor of degree <= 3.
ZariskiReport zariski_fiber_check(const Polynomial& f, std::size_t x, std::size_t y, const Scalar& a,
                                  std::uint64_t budget = factor_budget_from_env());

// Monic univariate factorization over F_p by trial division; exposed for tests.
std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> factor_mod_p(std::vector<std::uint32_t> g,
                                                                              std::uint32_t p,
                                                                              std::uint64_t budget);

enum class Verdict { AllEqual, Mismatch, Inconclusive };
std::string to_string(Verdict v);

struct ComparisonRow {
    std::string arc_id;
    PersistenceReport source;     // on X'
    PersistenceReport target;     // on X, along the pushforward
    std::optional<OracleResult> source_oracle;
    std::optional<OracleResult> target_oracle;
    Verdict verdict = Verdict::Inconclusive;
    std::string note;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    Verdict verdict = Verdict::AllEqual;
    std::optional<std::size_t> witness;  // first mismatching row
};

struct CompareOptions {
    bool oracle = false;
    std::size_t max_steps = default_max_steps;
};

/// rho' on X' against rho on X along the pushforward, per arc. Mismatch if
/// any conclusive row differs, else Inconclusive if any row is, else AllEqual.
ComparisonReport persistence_compare(const FiniteMorphismSpec& spec, const std::vector<NamedArc>& arcs,
                                     const CompareOptions& options = {});

struct ArcwiseRow {
    std::string arc_id;
    ArcOrder order1;
    ArcOrder order2;
    enum class Relation { Equal, Strict, Inconclusive } relation = Relation::Inconclusive;
};

struct ArcwiseReport {
    std::vector<ArcwiseRow> rows;
    std::optional<std::size_t> witness;  // first strict inequality
    bool consistent() const { return !witness.has_value(); }
    // Sampled over the given arcs only; equality is evidence, not a proof.
    static constexpr const char* caveat =
        "sampled necessary condition over the listed arcs, not a decision procedure";
};

/// ord_t(phi(G1)) against ord_t(phi(G2)) per arc. Throws Error(Precondition)
/// unless every generator of G1 is a generator of G2.
ArcwiseReport arcwise_order_equality(const ReesAlgebra& g1, const ReesAlgebra& g2, const std::vector<NamedArc>& arcs);

}  // namespace arcinv

#endif  // ARCINV_MORPHISMS_HPP
