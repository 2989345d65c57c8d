#ifndef ARCINV_ARCS_HPP
#define ARCINV_ARCS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arcinv/order.hpp"
#include "arcinv/polynomial.hpp"
#include "arcinv/presentation.hpp"
#include "arcinv/rees.hpp"
#include "arcinv/series.hpp"

namespace arcinv {

/// An arc Spec k[[t]] -> A^n given by one truncated series per ambient
/// coordinate, all at a common precision N.
class Arc {
public:
    // Throws Error(DimensionMismatch) / Error(Precision) on count or precision mismatch.
    Arc(RingPtr ring, std::vector<TruncatedSeries> series);

    // Convenience: coefficient lists (t^0 first), padded with zeros up to precision.
    static Arc from_coefficients(RingPtr ring, const std::vector<std::vector<Scalar>>& coefficients,
                                 std::size_t precision);

    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const Ring& ring() const noexcept { return *ring_; }
    const std::vector<TruncatedSeries>& series() const noexcept { return series_; }
    const TruncatedSeries& operator[](std::size_t i) const { return series_[i]; }
    std::size_t precision() const noexcept { return series_.empty() ? 0 : series_.front().precision(); }

    RationalPoint center() const;
    Arc truncated(std::size_t precision) const;

    std::string to_string() const;

    // rings compare by value: pushforward along an identity builds a fresh ring
    friend bool operator==(const Arc& a, const Arc& b) { return *a.ring_ == *b.ring_ && a.series_ == b.series_; }

private:
    RingPtr ring_;
    std::vector<TruncatedSeries> series_;
};

struct VarietyCheck {
    bool on_variety = true;
    // First violation: index into the defining list and the coefficient index.
    std::optional<std::size_t> polynomial;
    std::optional<std::size_t> coefficient;

    explicit operator bool() const noexcept { return on_variety; }
};

/// Every defining polynomial vanishes along the arc to its precision.
VarietyCheck validate_on_variety(const Arc& arc, std::span<const Polynomial> defining);

/// nu_t(phi) = min_i ord_t(phi_i - xi_i); Inconclusive if the arc is
/// constant to precision. Throws Error(Precondition) if center(phi) != xi.
OrderValue nu_t(const Arc& arc, const RationalPoint& xi);

/// ord_t(phi(G)) = min_i ord_t(phi(g_i)) / b_i.
///
/// A generator that vanishes to precision N contributes only the bound N/b_i;
/// the result is Finite when the smallest witnessed ratio is at most every
/// such bound, and Inconclusive otherwise.
ArcOrder ord_rees_along_arc(const Arc& arc, const ReesAlgebra& g);

inline constexpr std::size_t default_max_precision = 1u << 14;

/// phi_n = phi o (t -> t^n), precision n (N - 1) + 1.
Arc reparametrize(const Arc& arc, std::size_t n, std::size_t max_precision = default_max_precision);

struct PersistenceReport {
    ArcOrder r;                       // Q-persistence ord_t(phi(G))
    std::optional<mpz_class> rho;     // floor(r); empty when undefined
    std::optional<mpq_class> r_bar;   // r / nu_t
    std::optional<mpq_class> rho_bar; // rho / nu_t
    OrderValue nu_t = OrderValue::inconclusive(0);
    bool inconclusive = false;
    std::size_t witness_precision = 0;  // precision at which the data vanished
    std::size_t retry_precision = 0;    // 2N when inconclusive
    std::string note;
};

/// r, rho = floor(r), and the normalized values, for an arc centered at a
/// point of Sing(G). G must already be differentially saturated.
/// Throws Error(Precondition) when xi is not in Sing(G) or is not the center.
PersistenceReport persistence_invariants(const Arc& arc, const ReesAlgebra& g, const RationalPoint& xi);

/// beta_infinity: drop the series of the source's additional tower variables.
/// Throws Error(Precondition) if the arc does not lie on the source variety.
Arc pushforward(const Arc& source_arc, const FiniteMorphismSpec& spec);

}  // namespace arcinv

#endif  // ARCINV_ARCS_HPP
