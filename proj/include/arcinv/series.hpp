#ifndef ARCINV_SERIES_HPP
#define ARCINV_SERIES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "arcinv/field.hpp"
#include "arcinv/order.hpp"
#include "arcinv/polynomial.hpp"

namespace arcinv {

/// Power series in t known modulo t^N. Every operation propagates the
/// precision: results never claim coefficients beyond what the operands
/// determine.
class TruncatedSeries {
public:
    // Zero series of precision N >= 1.
    TruncatedSeries(Field field, std::size_t precision);
    // Coefficients beyond the list are zero; the list may not exceed precision.
    TruncatedSeries(Field field, std::vector<Scalar> coefficients, std::size_t precision);

    static TruncatedSeries constant(const Scalar& c, std::size_t precision);
    static TruncatedSeries monomial(const Scalar& c, std::size_t degree, std::size_t precision);

    const Field& field() const noexcept { return field_; }
    std::size_t precision() const noexcept { return c_.size(); }
    const Scalar& operator[](std::size_t k) const { return c_[k]; }
    const std::vector<Scalar>& coefficients() const noexcept { return c_; }
    const Scalar& constant_term() const { return c_.front(); }

    // Finite(n) for the first nonzero coefficient, Inconclusive(N) if none.
    OrderValue order() const;
    bool vanishes_to_precision() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Scalar& c);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const Scalar& c) { return a *= c; }

    TruncatedSeries pow(std::uint32_t e) const;

    TruncatedSeries truncated(std::size_t precision) const;
    // Subtracts the constant term.
    TruncatedSeries recentered() const;
    // a / t^k; requires the first k coefficients to vanish. Precision N - k.
    TruncatedSeries shifted_down(std::size_t k) const;
    // Multiplicative inverse of a series with nonzero constant term.
    TruncatedSeries inverse() const;
    // Exact quotient a / b where b has finite order k and a has order >= k.
    // The result has precision min(N_a, N_b) - k. Throws PrecisionError when
    // b vanishes to precision, Error(InexactDivision) if ord(a) < k.
    TruncatedSeries divided_by(const TruncatedSeries& b) const;

    // t -> t^n; output precision n (N - 1) + 1.
    TruncatedSeries substitute_power(std::size_t n) const;

    std::string to_string(const std::string& var = "t") const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void require_compatible(const TruncatedSeries& other) const;

    Field field_;
    std::vector<Scalar> c_;
};

/// Order of a truncated series (free-function form of TruncatedSeries::order).
OrderValue series_order(const TruncatedSeries& s);

enum class PrecisionPolicy { Strict, AllowDowngrade };

/// f(phi_1(t), ..., phi_n(t)). All series must share one precision unless the
/// caller allows downgrading to the minimum; then the result has that minimum.
TruncatedSeries series_eval(const Polynomial& f, std::span<const TruncatedSeries> phi,
                            PrecisionPolicy policy = PrecisionPolicy::Strict);

}  // namespace arcinv

#endif  // ARCINV_SERIES_HPP
