#include "arcinv/field.hpp"

#include <cctype>
#include <ostream>

#include "arcinv/error.hpp"

namespace arcinv {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::FieldMismatch: return "field mismatch";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::InexactDivision: return "inexact division";
    case ErrorKind::Precision: return "precision exhausted";
    case ErrorKind::Budget: return "budget exceeded";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Validation: return "validation error";
    }
    return "error";
}

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::with_characteristic(std::uint32_t p) {
    if (p == 0) return Field{};
    if (p >= max_characteristic || !is_prime(p)) {
        throw Error(ErrorKind::InvalidArgument,
                    "characteristic must be 0 or a prime below 65536, got " + std::to_string(p));
    }
    return Field{p};
}

std::string Field::name() const {
    return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

namespace {

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    // Fermat; p < 2^16 keeps products inside 64 bits.
    std::uint64_t result = 1, base = a % p;
    std::uint32_t e = p - 2;
    while (e != 0) {
        if (e & 1u) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

}  // namespace

Scalar Scalar::from_int(Field f, long v) {
    Scalar s(f);
    if (f.is_prime_field()) {
        long p = static_cast<long>(f.characteristic());
        long r = v % p;
        if (r < 0) r += p;
        s.residue_ = static_cast<std::uint32_t>(r);
    } else {
        s.q_ = v;
    }
    return s;
}

Scalar Scalar::from_integer(Field f, const mpz_class& v) {
    Scalar s(f);
    if (f.is_prime_field()) {
        s.residue_ = reduce(v, f.characteristic());
    } else {
        s.q_ = v;
    }
    return s;
}

Scalar Scalar::from_rational(Field f, const mpq_class& v) {
    if (!f.is_prime_field()) {
        Scalar s(f);
        s.q_ = v;
        s.q_.canonicalize();
        return s;
    }
    std::uint32_t den = reduce(v.get_den(), f.characteristic());
    if (den == 0) {
        throw Error(ErrorKind::InvalidArgument,
                    "denominator of " + v.get_str() + " is not invertible in " + f.name());
    }
    return from_integer(f, v.get_num()) * from_int(f, den).inverse();
}

Scalar Scalar::parse(Field f, std::string_view text) {
    std::string t;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    }
    auto valid_int = [](std::string_view s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        }
        return true;
    };
    std::size_t slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw Error(ErrorKind::InvalidArgument, "not a rational number: '" + std::string(text) + "'");
    }
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    return from_rational(f, mpq_class(n, d));
}

bool Scalar::is_zero() const noexcept {
    return field_.is_prime_field() ? residue_ == 0 : sgn(q_) == 0;
}

bool Scalar::is_one() const noexcept {
    return field_.is_prime_field() ? residue_ == 1 : q_ == 1;
}

const mpq_class& Scalar::rational() const {
    if (field_.is_prime_field()) throw Error(ErrorKind::FieldMismatch, "rational() on a residue");
    return q_;
}

std::uint32_t Scalar::residue() const {
    if (!field_.is_prime_field()) throw Error(ErrorKind::FieldMismatch, "residue() on a rational");
    return residue_;
}

void Scalar::require_same_field(const Scalar& other) const {
    if (!(field_ == other.field_)) {
        throw Error(ErrorKind::FieldMismatch,
                    "cannot combine elements of " + field_.name() + " and " + other.field_.name());
    }
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    if (field_.is_prime_field()) {
        r.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
    } else {
        r.q_ = -q_;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_prime_field()) {
        residue_ = (residue_ + rhs.residue_) % field_.characteristic();
    } else {
        q_ += rhs.q_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_prime_field()) {
        std::uint32_t p = field_.characteristic();
        residue_ = (residue_ + p - rhs.residue_) % p;
    } else {
        q_ -= rhs.q_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (field_.is_prime_field()) {
        residue_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(residue_) * rhs.residue_ %
                                              field_.characteristic());
    } else {
        q_ *= rhs.q_;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    Scalar r(field_);
    if (field_.is_prime_field()) {
        r.residue_ = inverse_mod(residue_, field_.characteristic());
    } else {
        r.q_ = 1 / q_;
    }
    return r;
}

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar result = one(field_);
    Scalar base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_prime_field() ? a.residue_ == b.residue_ : a.q_ == b.q_;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    return a.field_.is_prime_field() ? a.residue_ < b.residue_ : a.q_ < b.q_;
}

std::string Scalar::to_string() const {
    return field_.is_prime_field() ? std::to_string(residue_) : q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar binomial(Field f, std::uint64_t n, std::uint64_t k) {
    if (k > n) return Scalar::zero(f);
    if (f.is_prime_field()) {
        // Lucas: product of digit binomials in base p.
        std::uint64_t p = f.characteristic();
        Scalar result = Scalar::one(f);
        while (n != 0 || k != 0) {
            std::uint64_t nd = n % p, kd = k % p;
            if (kd > nd) return Scalar::zero(f);
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), nd, kd);
            result *= Scalar::from_integer(f, c);
            n /= p;
            k /= p;
        }
        return result;
    }
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Scalar::from_integer(f, c);
}

}  // namespace arcinv
