#include "arcinv/order.hpp"

#include "arcinv/error.hpp"

namespace arcinv {

std::uint64_t OrderValue::value() const {
    if (kind_ == Kind::Infinity) throw Error(ErrorKind::InvalidArgument, "infinite order has no value");
    return value_;
}

std::string OrderValue::to_string() const {
    switch (kind_) {
    case Kind::Finite: return std::to_string(value_);
    case Kind::Infinity: return "inf";
    case Kind::Inconclusive: return ">=" + std::to_string(value_) + "?";
    }
    return {};
}

std::string rational_string(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return c.get_str();
}

RationalOrInfinity::RationalOrInfinity(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

RationalOrInfinity RationalOrInfinity::infinity() {
    RationalOrInfinity r;
    r.infinite_ = true;
    return r;
}

RationalOrInfinity RationalOrInfinity::ratio(std::uint64_t num, std::uint64_t den) {
    return RationalOrInfinity(mpq_class(mpz_class(num), mpz_class(den)));
}

const mpq_class& RationalOrInfinity::value() const {
    if (infinite_) throw Error(ErrorKind::InvalidArgument, "infinity has no rational value");
    return q_;
}

mpz_class RationalOrInfinity::floor() const {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), value().get_num_mpz_t(), value().get_den_mpz_t());
    return f;
}

std::string RationalOrInfinity::to_string() const { return infinite_ ? "inf" : rational_string(q_); }

bool operator==(const RationalOrInfinity& a, const RationalOrInfinity& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.q_ == b.q_;
}

bool operator<(const RationalOrInfinity& a, const RationalOrInfinity& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.q_ < b.q_;
}

ArcOrder ArcOrder::finite(mpq_class q) {
    ArcOrder r;
    r.kind_ = Kind::Finite;
    r.q_ = std::move(q);
    r.q_.canonicalize();
    return r;
}

ArcOrder ArcOrder::infinity() { return ArcOrder{}; }

ArcOrder ArcOrder::inconclusive(mpq_class lower_bound, std::size_t precision) {
    ArcOrder r;
    r.kind_ = Kind::Inconclusive;
    r.q_ = std::move(lower_bound);
    r.q_.canonicalize();
    r.precision_ = precision;
    return r;
}

const mpq_class& ArcOrder::value() const {
    if (kind_ == Kind::Infinity) throw Error(ErrorKind::InvalidArgument, "infinite order has no value");
    return q_;
}

std::string ArcOrder::to_string() const {
    switch (kind_) {
    case Kind::Finite: return rational_string(q_);
    case Kind::Infinity: return "inf";
    case Kind::Inconclusive: return ">=" + rational_string(q_) + "?";
    }
    return {};
}

bool operator==(const ArcOrder& a, const ArcOrder& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
    case ArcOrder::Kind::Infinity: return true;
    case ArcOrder::Kind::Finite: return a.q_ == b.q_;
    case ArcOrder::Kind::Inconclusive: return a.q_ == b.q_ && a.precision_ == b.precision_;
    }
    return false;
}

}  // namespace arcinv
