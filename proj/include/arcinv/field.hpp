#ifndef ARCINV_FIELD_HPP
#define ARCINV_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace arcinv {

/// Coefficient field: Q (characteristic 0) or F_p for a prime p < 2^16.
class Field {
public:
    static constexpr std::uint32_t max_characteristic = 1u << 16;

    Field() = default;

    static Field rationals() { return Field{}; }
    // Throws Error(InvalidArgument) unless p is 0 or a prime below 2^16.
    static Field with_characteristic(std::uint32_t p);

    std::uint32_t characteristic() const noexcept { return p_; }
    bool is_prime_field() const noexcept { return p_ != 0; }

    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint32_t n) noexcept;

/// An exact element of a Field. Rationals are kept reduced; residues are
/// canonical in [0, p). Mixing elements of different fields throws.
class Scalar {
public:
    // Zero of Q.
    Scalar() = default;

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return from_int(f, 1); }
    static Scalar from_int(Field f, long v);
    static Scalar from_integer(Field f, const mpz_class& v);
    // Throws Error(InvalidArgument) when the denominator is not invertible in f.
    static Scalar from_rational(Field f, const mpq_class& v);
    // Accepts "n", "-n", "p/q"; throws Error(InvalidArgument) on malformed text.
    static Scalar parse(Field f, std::string_view text);

    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    // Characteristic 0 only.
    const mpq_class& rational() const;
    // Characteristic p only.
    std::uint32_t residue() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;
    Scalar pow(std::uint64_t e) const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Deterministic total order, used only to canonicalize containers.
    friend bool canonical_less(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    explicit Scalar(Field f) : field_(f) {}
    void require_same_field(const Scalar& other) const;

    Field field_;
    std::uint32_t residue_ = 0;
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Binomial coefficient C(n, k) as an element of f (0 when k > n).
Scalar binomial(Field f, std::uint64_t n, std::uint64_t k);

}  // namespace arcinv

#endif  // ARCINV_FIELD_HPP
