#include "arcinv/series.hpp"

#include <algorithm>
#include <sstream>

#include "arcinv/error.hpp"

namespace arcinv {

TruncatedSeries::TruncatedSeries(Field field, std::size_t precision)
    : field_(field), c_(precision, Scalar::zero(field)) {
    if (precision == 0) throw Error(ErrorKind::InvalidArgument, "series precision must be at least 1");
}

TruncatedSeries::TruncatedSeries(Field field, std::vector<Scalar> coefficients, std::size_t precision)
    : TruncatedSeries(field, precision) {
    if (coefficients.size() > precision) {
        throw Error(ErrorKind::InvalidArgument, std::to_string(coefficients.size()) +
                                                    " coefficients given for precision " +
                                                    std::to_string(precision));
    }
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        if (!(coefficients[k].field() == field)) {
            throw Error(ErrorKind::FieldMismatch, "series coefficient over " + coefficients[k].field().name());
        }
        c_[k] = std::move(coefficients[k]);
    }
}

TruncatedSeries TruncatedSeries::constant(const Scalar& c, std::size_t precision) {
    return TruncatedSeries(c.field(), {c}, precision);
}

TruncatedSeries TruncatedSeries::monomial(const Scalar& c, std::size_t degree, std::size_t precision) {
    TruncatedSeries s(c.field(), precision);
    if (degree < precision) s.c_[degree] = c;
    return s;
}

OrderValue TruncatedSeries::order() const {
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (!c_[k].is_zero()) return OrderValue::finite(k);
    }
    return OrderValue::inconclusive(c_.size());
}

bool TruncatedSeries::vanishes_to_precision() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

void TruncatedSeries::require_compatible(const TruncatedSeries& other) const {
    if (!(field_ == other.field_)) throw Error(ErrorKind::FieldMismatch, "series over different fields");
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_compatible(rhs);
    if (c_.size() != rhs.c_.size()) {
        // mixed precisions must be truncated explicitly by the caller
        throw Error(ErrorKind::Precision, "series precisions differ (" + std::to_string(c_.size()) + " vs " +
                                              std::to_string(rhs.c_.size()) + ")");
    }
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += rhs.c_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_compatible(rhs);
    if (c_.size() != rhs.c_.size()) {
        // mixed precisions must be truncated explicitly by the caller
        throw Error(ErrorKind::Precision, "series precisions differ (" + std::to_string(c_.size()) + " vs " +
                                              std::to_string(rhs.c_.size()) + ")");
    }
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= rhs.c_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Scalar& c) {
    for (auto& v : c_) v *= c;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_compatible(b);
    std::size_t n = std::min(a.precision(), b.precision());
    TruncatedSeries r(a.field_, n);
    // Arcs are mostly sparse (monomials, reparametrizations); skip zeros.
    std::vector<std::size_t> nz_b;
    for (std::size_t j = 0; j < n; ++j) {
        if (!b.c_[j].is_zero()) nz_b.push_back(j);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j : nz_b) {
            if (i + j >= n) break;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::pow(std::uint32_t e) const {
    TruncatedSeries result = constant(Scalar::one(field_), precision());
    TruncatedSeries base = *this;
    while (e != 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t precision) const {
    if (precision == 0) throw Error(ErrorKind::InvalidArgument, "series precision must be at least 1");
    if (precision > c_.size()) {
        throw PrecisionError("cannot raise precision from " + std::to_string(c_.size()) + " to " +
                                 std::to_string(precision),
                             c_.size());
    }
    TruncatedSeries r(*this);
    r.c_.resize(precision);
    return r;
}

TruncatedSeries TruncatedSeries::recentered() const {
    TruncatedSeries r(*this);
    r.c_[0] = Scalar::zero(field_);
    return r;
}

TruncatedSeries TruncatedSeries::shifted_down(std::size_t k) const {
    if (k >= c_.size()) {
        throw PrecisionError("shift by " + std::to_string(k) + " leaves no coefficients", c_.size());
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (!c_[j].is_zero()) {
            throw Error(ErrorKind::InexactDivision, "series not divisible by t^" + std::to_string(k));
        }
    }
    TruncatedSeries r(field_, c_.size() - k);
    std::copy(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end(), r.c_.begin());
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0].is_zero()) throw Error(ErrorKind::InvalidArgument, "series with zero constant term is not a unit");
    std::size_t n = c_.size();
    TruncatedSeries r(field_, n);
    Scalar inv0 = c_[0].inverse();
    std::vector<std::size_t> nz;
    for (std::size_t j = 1; j < n; ++j) {
        if (!c_[j].is_zero()) nz.push_back(j);
    }
    r.c_[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Scalar acc = Scalar::zero(field_);
        for (std::size_t j : nz) {
            if (j > k) break;
            if (!r.c_[k - j].is_zero()) acc += c_[j] * r.c_[k - j];
        }
        r.c_[k] = -(acc * inv0);
    }
    return r;
}

TruncatedSeries TruncatedSeries::divided_by(const TruncatedSeries& b) const {
    require_compatible(b);
    OrderValue ob = b.order();
    if (!ob.is_finite()) {
        throw PrecisionError("divisor vanishes to precision " + std::to_string(b.precision()), b.precision());
    }
    std::size_t k = ob.value();
    std::size_t n = std::min(precision(), b.precision());
    if (k >= n) throw PrecisionError("quotient has no determined coefficients", n);
    TruncatedSeries num = truncated(n).shifted_down(k);
    TruncatedSeries den = b.truncated(n).shifted_down(k);
    // Monomial divisor: plain scaling.
    bool monomial = std::all_of(den.c_.begin() + 1, den.c_.end(), [](const Scalar& s) { return s.is_zero(); });
    if (monomial) return num * den.c_[0].inverse();
    return num * den.inverse();
}

TruncatedSeries TruncatedSeries::substitute_power(std::size_t n) const {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "reparametrization exponent must be at least 1");
    std::size_t out_precision = n * (c_.size() - 1) + 1;
    TruncatedSeries r(field_, out_precision);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[n * k] = c_[k];
    return r;
}

std::string TruncatedSeries::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        std::string coeff = c_[k].to_string();
        bool negative = coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        if (k == 0) {
            os << coeff;
            continue;
        }
        if (coeff != "1") os << coeff << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << c_.size() << ")";
    return os.str();
}

OrderValue series_order(const TruncatedSeries& s) { return s.order(); }

TruncatedSeries series_eval(const Polynomial& f, std::span<const TruncatedSeries> phi, PrecisionPolicy policy) {
    const Ring& ring = f.ring();
    if (phi.size() != ring.size()) {
        throw Error(ErrorKind::DimensionMismatch, "series_eval needs " + std::to_string(ring.size()) +
                                                      " series, got " + std::to_string(phi.size()));
    }
    std::size_t n = 0;
    if (phi.empty()) {
        throw Error(ErrorKind::InvalidArgument, "series_eval over a ring without variables");
    }
    n = phi.front().precision();
    for (const auto& s : phi) {
        if (!(s.field() == ring.field())) throw Error(ErrorKind::FieldMismatch, "series over a different field");
        if (s.precision() != n) {
            if (policy == PrecisionPolicy::Strict) {
                throw Error(ErrorKind::Precision, "series precisions differ (" + std::to_string(n) + " vs " +
                                                      std::to_string(s.precision()) + ")");
            }
            n = std::min(n, s.precision());
        }
    }
    std::vector<std::vector<TruncatedSeries>> powers(phi.size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        std::uint32_t d = f.degree_in(i);
        powers[i].push_back(TruncatedSeries::constant(Scalar::one(ring.field()), n));
        TruncatedSeries base = phi[i].truncated(n);
        for (std::uint32_t k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * base);
    }
    TruncatedSeries out(ring.field(), n);
    for (const auto& [e, c] : f.terms()) {
        TruncatedSeries term = TruncatedSeries::constant(c, n);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) term = term * powers[i][e[i]];
        }
        out += term;
    }
    return out;
}

}  // namespace arcinv
