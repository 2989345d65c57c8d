#ifndef ARCINV_ORDER_HPP
#define ARCINV_ORDER_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace arcinv {

/// Order of a polynomial at a point or of a truncated series.
///
/// Finite(n) is only produced when a nonzero coefficient in degree n has been
/// seen. Inconclusive(N) means every inspected coefficient below N vanished,
/// so all that is known is "order >= N".
class OrderValue {
public:
    enum class Kind { Finite, Infinity, Inconclusive };

    static OrderValue finite(std::uint64_t n) { return OrderValue(Kind::Finite, n); }
    static OrderValue infinity() { return OrderValue(Kind::Infinity, 0); }
    static OrderValue inconclusive(std::uint64_t precision) {
        return OrderValue(Kind::Inconclusive, precision);
    }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    bool is_infinite() const noexcept { return kind_ == Kind::Infinity; }
    bool is_inconclusive() const noexcept { return kind_ == Kind::Inconclusive; }

    // Finite: the order. Inconclusive: the precision N. Throws for Infinity.
    std::uint64_t value() const;

    std::string to_string() const;

    friend bool operator==(const OrderValue&, const OrderValue&) = default;

private:
    OrderValue(Kind k, std::uint64_t v) : kind_(k), value_(v) {}
    Kind kind_;
    std::uint64_t value_;
};

/// Exact nonnegative rational or +infinity; rationals stay reduced.
class RationalOrInfinity {
public:
    RationalOrInfinity() = default;  // 0
    explicit RationalOrInfinity(mpq_class q);
    static RationalOrInfinity infinity();
    static RationalOrInfinity ratio(std::uint64_t num, std::uint64_t den);

    bool is_infinite() const noexcept { return infinite_; }
    // Throws for infinity.
    const mpq_class& value() const;

    // floor of a finite value.
    mpz_class floor() const;

    std::string to_string() const;  // "p/q", "n" or "inf"

    friend bool operator==(const RationalOrInfinity& a, const RationalOrInfinity& b);
    friend bool operator<(const RationalOrInfinity& a, const RationalOrInfinity& b);

private:
    bool infinite_ = false;
    mpq_class q_;
};

std::string rational_string(const mpq_class& q);

/// Order of a Rees algebra along an arc. Inconclusive carries both the
/// precision N at which evaluation ran and the proven lower bound.
class ArcOrder {
public:
    enum class Kind { Finite, Infinity, Inconclusive };

    static ArcOrder finite(mpq_class q);
    static ArcOrder infinity();
    static ArcOrder inconclusive(mpq_class lower_bound, std::size_t precision);

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    bool is_infinite() const noexcept { return kind_ == Kind::Infinity; }
    bool is_inconclusive() const noexcept { return kind_ == Kind::Inconclusive; }

    // Finite value, or the lower bound when inconclusive. Throws for infinity.
    const mpq_class& value() const;
    std::size_t precision() const noexcept { return precision_; }

    std::string to_string() const;

    friend bool operator==(const ArcOrder& a, const ArcOrder& b);

private:
    Kind kind_ = Kind::Infinity;
    mpq_class q_;
    std::size_t precision_ = 0;
};

}  // namespace arcinv

#endif  // ARCINV_ORDER_HPP
