#ifndef ARCINV_POLYNOMIAL_HPP
#define ARCINV_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arcinv/field.hpp"
#include "arcinv/order.hpp"

namespace arcinv {

/// Polynomial ring k[x_1, ..., x_n]: a coefficient field plus ordered names.
class Ring {
public:
    // Throws Error(InvalidArgument) on duplicate or malformed names.
    Ring(Field field, std::vector<std::string> variables);

    const Field& field() const noexcept { return field_; }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    std::size_t size() const noexcept { return variables_.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    Field field_;
    std::vector<std::string> variables_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> variables);

bool is_identifier(std::string_view name);

using Exponents = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponents& e);

/// Graded lexicographic order, largest first, by the ring's variable order.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// A rational point of affine space over the ring's field.
class RationalPoint {
public:
    RationalPoint() = default;
    explicit RationalPoint(std::vector<Scalar> coordinates) : coordinates_(std::move(coordinates)) {}

    static RationalPoint origin(const Ring& ring);

    std::size_t size() const noexcept { return coordinates_.size(); }
    const Scalar& operator[](std::size_t i) const { return coordinates_[i]; }
    const std::vector<Scalar>& coordinates() const noexcept { return coordinates_; }
    bool is_origin() const;

    std::string to_string() const;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
    friend bool operator<(const RationalPoint& a, const RationalPoint& b);

private:
    std::vector<Scalar> coordinates_;
};

/// Sparse multivariate polynomial. Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Scalar, GrlexGreater>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, const Scalar& c);
    static Polynomial constant(RingPtr ring, long c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, Exponents e, const Scalar& c);

    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const Ring& ring() const noexcept { return *ring_; }
    const Field& field() const noexcept { return ring_->field(); }
    const TermMap& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const noexcept { return terms_.size(); }

    // Both throw for the zero polynomial.
    std::uint64_t total_degree() const;
    std::uint64_t lowest_degree() const;
    std::uint32_t degree_in(std::size_t var) const;
    // Leading coefficient in the grlex order; throws for zero.
    const Scalar& leading_coefficient() const;
    Scalar coefficient(const Exponents& e) const;
    // Coefficient of var^k, as a polynomial in the remaining variables.
    Polynomial coefficient_in(std::size_t var, std::uint32_t k) const;
    bool involves(std::size_t var) const;

    void add_term(const Exponents& e, const Scalar& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Scalar& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }

    Polynomial pow(std::uint32_t e) const;

    Scalar evaluate(const RationalPoint& p) const;

    // f(images[0], ..., images[n-1]); images live in any common ring.
    Polynomial compose(std::span<const Polynomial> images) const;

    // Exact division by var^k; throws Error(InexactDivision) otherwise.
    Polynomial divide_by_variable_power(std::size_t var, std::uint32_t k) const;
    // Largest k with var^k | f (0 for the zero polynomial by convention).
    std::uint32_t variable_power_dividing(std::size_t var) const;

    // Same polynomial over another ring, matching variables by name.
    Polynomial rebased(RingPtr target) const;

    Polynomial monic() const;

    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    // Deterministic total order on polynomials of one ring.
    friend bool canonical_less(const Polynomial& a, const Polynomial& b);

private:
    void require_same_ring(const Polynomial& other) const;

    RingPtr ring_;
    TermMap terms_;
};

/// Parses the plain-text grammar: sums of terms built from integer or p/q
/// coefficients, declared identifiers, `^` exponents, optional `*`, and
/// parentheses. Throws ParseError with a 1-based column (line 1).
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

// --- order functions and the substitutions they rest on ---

/// g(x) = f(x + p).
Polynomial poly_translate(const Polynomial& f, const RationalPoint& p);

/// Order of f in the local ring at p: least total degree of f(x + p).
OrderValue poly_order_at(const Polynomial& f, const RationalPoint& p);

/// nu_p(f) >= n, without computing the order exactly.
bool poly_order_at_least(const Polynomial& f, const RationalPoint& p, std::uint64_t n);

/// Hasse derivative D_var^{(a)}: x^e maps to C(e_var, a) x^{e - a e_var}.
Polynomial hasse_derivative(const Polynomial& f, std::size_t var, std::uint32_t a);

/// Composite Hasse operator D^{(alpha)} = prod_i D_i^{(alpha_i)}.
Polynomial hasse_derivative(const Polynomial& f, const Exponents& alpha);

/// All multi-indices of length n with total order <= max_total, graded.
std::vector<Exponents> multi_indices_up_to(std::size_t n, std::uint32_t max_total);

void require_dimension(const Ring& ring, const RationalPoint& p);

}  // namespace arcinv

#endif  // ARCINV_POLYNOMIAL_HPP
