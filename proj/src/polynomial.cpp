#include "arcinv/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "arcinv/error.hpp"

namespace arcinv {

bool is_identifier(std::string_view name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Ring::Ring(Field field, std::vector<std::string> variables)
    : field_(field), variables_(std::move(variables)) {
    std::set<std::string> seen;
    for (const auto& v : variables_) {
        if (!is_identifier(v)) throw Error(ErrorKind::InvalidArgument, "invalid variable name '" + v + "'");
        if (!seen.insert(v).second) throw Error(ErrorKind::InvalidArgument, "duplicate variable '" + v + "'");
    }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i] == name) return i;
    }
    return std::nullopt;
}

RingPtr make_ring(Field field, std::vector<std::string> variables) {
    return std::make_shared<const Ring>(field, std::move(variables));
}

std::uint64_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// --- RationalPoint ---

RationalPoint RationalPoint::origin(const Ring& ring) {
    return RationalPoint(std::vector<Scalar>(ring.size(), Scalar::zero(ring.field())));
}

bool RationalPoint::is_origin() const {
    return std::all_of(coordinates_.begin(), coordinates_.end(), [](const Scalar& c) { return c.is_zero(); });
}

std::string RationalPoint::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coordinates_.size(); ++i) {
        if (i != 0) out += ",";
        out += coordinates_[i].to_string();
    }
    return out + ")";
}

bool operator<(const RationalPoint& a, const RationalPoint& b) {
    return std::lexicographical_compare(a.coordinates_.begin(), a.coordinates_.end(), b.coordinates_.begin(),
                                        b.coordinates_.end(),
                                        [](const Scalar& x, const Scalar& y) { return canonical_less(x, y); });
}

void require_dimension(const Ring& ring, const RationalPoint& p) {
    if (p.size() != ring.size()) {
        throw Error(ErrorKind::DimensionMismatch, "point " + p.to_string() + " has " + std::to_string(p.size()) +
                                                      " coordinates, ring has " + std::to_string(ring.size()) +
                                                      " variables");
    }
    for (const auto& c : p.coordinates()) {
        if (!(c.field() == ring.field())) {
            throw Error(ErrorKind::FieldMismatch, "point coordinate over " + c.field().name() + ", ring over " +
                                                      ring.field().name());
        }
    }
}

// --- Polynomial ---

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
    Polynomial p(std::move(ring));
    p.add_term(Exponents(p.ring().size(), 0), c);
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
    Field f = ring->field();
    return constant(std::move(ring), Scalar::from_int(f, c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->size()) throw Error(ErrorKind::DimensionMismatch, "variable index out of range");
    Exponents e(ring->size(), 0);
    e[index] = 1;
    Field f = ring->field();
    return monomial(std::move(ring), std::move(e), Scalar::one(f));
}

Polynomial Polynomial::monomial(RingPtr ring, Exponents e, const Scalar& c) {
    if (e.size() != ring->size()) throw Error(ErrorKind::DimensionMismatch, "exponent vector length mismatch");
    Polynomial p(std::move(ring));
    p.add_term(e, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && arcinv::total_degree(terms_.begin()->first) == 0);
}

std::uint64_t Polynomial::total_degree() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "degree of the zero polynomial");
    return arcinv::total_degree(terms_.begin()->first);
}

std::uint64_t Polynomial::lowest_degree() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "order of the zero polynomial");
    return arcinv::total_degree(terms_.rbegin()->first);
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

const Scalar& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading coefficient of the zero polynomial");
    return terms_.begin()->second;
}

Scalar Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field()) : it->second;
}

Polynomial Polynomial::coefficient_in(std::size_t var, std::uint32_t k) const {
    Polynomial out(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != k) continue;
        Exponents r = e;
        r[var] = 0;
        out.add_term(r, c);
    }
    return out;
}

bool Polynomial::involves(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] != 0; });
}

void Polynomial::add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::require_same_ring(const Polynomial& other) const {
    if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) {
        throw Error(ErrorKind::DimensionMismatch, "polynomials over different rings");
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    require_same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    require_same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    Polynomial r(a.ring_);
    Exponents e(a.ring().size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

Scalar Polynomial::evaluate(const RationalPoint& p) const {
    require_dimension(*ring_, p);
    Scalar sum = Scalar::zero(field());
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) term *= p[i].pow(e[i]);
        }
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::compose(std::span<const Polynomial> images) const {
    if (images.size() != ring_->size()) {
        throw Error(ErrorKind::DimensionMismatch, "compose needs one image per variable");
    }
    if (images.empty()) return *this;
    const RingPtr& target = images.front().ring_ptr();
    // Cache image powers per variable.
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        images[i].require_same_ring(images.front());
        powers[i].push_back(constant(target, 1));
        std::uint32_t d = degree_in(i);
        for (std::uint32_t k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * images[i]);
    }
    Polynomial out(target);
    for (const auto& [e, c] : terms_) {
        Polynomial term = constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) term *= powers[i][e[i]];
        }
        out += term;
    }
    return out;
}

Polynomial Polynomial::divide_by_variable_power(std::size_t var, std::uint32_t k) const {
    Polynomial out(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] < k) {
            throw Error(ErrorKind::InexactDivision, to_string() + " is not divisible by " +
                                                        ring_->variables()[var] + "^" + std::to_string(k));
        }
        Exponents r = e;
        r[var] -= k;
        out.terms_.emplace(std::move(r), c);
    }
    return out;
}

std::uint32_t Polynomial::variable_power_dividing(std::size_t var) const {
    if (terms_.empty()) return 0;
    std::uint32_t k = UINT32_MAX;
    for (const auto& [e, c] : terms_) k = std::min(k, e[var]);
    return k;
}

Polynomial Polynomial::rebased(RingPtr target) const {
    if (!(target->field() == field())) throw Error(ErrorKind::FieldMismatch, "rebase across fields");
    std::vector<std::optional<std::size_t>> map(ring_->size());
    for (std::size_t i = 0; i < ring_->size(); ++i) map[i] = target->index_of(ring_->variables()[i]);
    Polynomial out(target);
    for (const auto& [e, c] : terms_) {
        Exponents r(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!map[i]) {
                throw Error(ErrorKind::DimensionMismatch,
                            "variable '" + ring_->variables()[i] + "' missing from target ring");
            }
            r[*map[i]] = e[i];
        }
        out.add_term(r, c);
    }
    return out;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return *this * leading_coefficient().inverse();
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string coeff = c.to_string();
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool constant_term = arcinv::total_degree(e) == 0;
        bool wrote = false;
        if (coeff != "1" || constant_term) {
            os << coeff;
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << ring_->variables()[i];
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
    return a.terms_ == b.terms_;
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    GrlexGreater greater;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return greater(ia->first, ib->first);
        if (ia->second != ib->second) return canonical_less(ia->second, ib->second);
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

// --- algebra-core operations ---

Polynomial poly_translate(const Polynomial& f, const RationalPoint& p) {
    require_dimension(f.ring(), p);
    if (p.is_origin()) return f;
    const RingPtr& ring = f.ring_ptr();
    std::vector<Polynomial> images;
    images.reserve(ring->size());
    for (std::size_t i = 0; i < ring->size(); ++i) {
        images.push_back(Polynomial::variable(ring, i) + Polynomial::constant(ring, p[i]));
    }
    return f.compose(images);
}

namespace {

// min(nu_p(f), cap) for nonzero f. The coefficient of x^beta in f(x + p) is
// sum_e c_e prod_i C(e_i, beta_i) p_i^(e_i - beta_i); where p_i = 0 only
// beta_i = e_i survives, so terms are grouped by their exponents in those
// variables and each group is expanded in the remaining ones alone.
std::uint64_t order_capped(const Polynomial& f, const RationalPoint& p, std::uint64_t cap) {
    const std::size_t n = f.ring().size();
    const Field& field = f.field();
    std::vector<std::size_t> live;  // nonzero coordinates
    for (std::size_t i = 0; i < n; ++i) {
        if (!p[i].is_zero()) live.push_back(i);
    }
    if (live.empty()) return std::min<std::uint64_t>(f.lowest_degree(), cap);

    std::map<Exponents, std::vector<std::pair<Exponents, Scalar>>> groups;
    for (const auto& [e, c] : f.terms()) {
        Exponents key = e;
        for (auto i : live) key[i] = 0;
        groups[key].emplace_back(e, c);
    }
    std::vector<std::pair<std::uint64_t, const std::vector<std::pair<Exponents, Scalar>>*>> order;
    for (const auto& [key, terms] : groups) order.emplace_back(total_degree(key), &terms);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::uint64_t best = cap;
    std::vector<std::uint32_t> beta(live.size(), 0);
    for (const auto& [base, terms] : order) {
        if (base >= best) break;
        std::uint32_t max_deg = 0;
        for (const auto& t : *terms) {
            std::uint32_t d = 0;
            for (auto i : live) d += t.first[i];
            max_deg = std::max(max_deg, d);
        }
        // Degree k in the live variables: first k with a nonzero coefficient.
        for (std::uint64_t k = 0; base + k < best && k <= max_deg; ++k) {
            bool nonzero = false;
            auto visit = [&](auto&& self, std::size_t j, std::uint64_t left) -> void {
                if (nonzero) return;
                if (j + 1 == live.size()) {
                    beta[j] = static_cast<std::uint32_t>(left);
                    Scalar acc = Scalar::zero(field);
                    for (const auto& [e, c] : *terms) {
                        Scalar v = c;
                        for (std::size_t q = 0; q < live.size() && !v.is_zero(); ++q) {
                            std::uint32_t ei = e[live[q]];
                            if (ei < beta[q]) {
                                v = Scalar::zero(field);
                                break;
                            }
                            v *= binomial(field, ei, beta[q]) * p[live[q]].pow(ei - beta[q]);
                        }
                        acc += v;
                    }
                    if (!acc.is_zero()) nonzero = true;
                    return;
                }
                for (std::uint64_t b = 0; b <= left; ++b) {
                    beta[j] = static_cast<std::uint32_t>(b);
                    self(self, j + 1, left - b);
                    if (nonzero) return;
                }
            };
            visit(visit, 0, k);
            if (nonzero) {
                best = base + k;
                break;
            }
        }
    }
    return best;
}

}  // namespace

OrderValue poly_order_at(const Polynomial& f, const RationalPoint& p) {
    require_dimension(f.ring(), p);
    if (f.is_zero()) return OrderValue::infinity();
    return OrderValue::finite(order_capped(f, p, f.total_degree() + 1));
}

bool poly_order_at_least(const Polynomial& f, const RationalPoint& p, std::uint64_t n) {
    require_dimension(f.ring(), p);
    if (f.is_zero() || n == 0) return true;
    return order_capped(f, p, n) >= n;
}

Polynomial hasse_derivative(const Polynomial& f, std::size_t var, std::uint32_t a) {
    if (var >= f.ring().size()) throw Error(ErrorKind::DimensionMismatch, "variable index out of range");
    Polynomial out(f.ring_ptr());
    for (const auto& [e, c] : f.terms()) {
        if (e[var] < a) continue;
        Exponents r = e;
        r[var] -= a;
        out.add_term(r, c * binomial(f.field(), e[var], a));
    }
    return out;
}

Polynomial hasse_derivative(const Polynomial& f, const Exponents& alpha) {
    if (alpha.size() != f.ring().size()) throw Error(ErrorKind::DimensionMismatch, "multi-index length mismatch");
    Polynomial out(f.ring_ptr());
    for (const auto& [e, c] : f.terms()) {
        Scalar coeff = c;
        Exponents r = e;
        bool vanishes = false;
        for (std::size_t i = 0; i < e.size() && !vanishes; ++i) {
            if (alpha[i] == 0) continue;
            if (e[i] < alpha[i]) {
                vanishes = true;
                break;
            }
            coeff *= binomial(f.field(), e[i], alpha[i]);
            r[i] -= alpha[i];
        }
        if (!vanishes) out.add_term(r, coeff);
    }
    return out;
}

std::vector<Exponents> multi_indices_up_to(std::size_t n, std::uint32_t max_total) {
    std::vector<Exponents> out;
    Exponents cur(n, 0);
    // Depth-first over compositions; sorted afterwards into graded order.
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t k = 0; k <= left; ++k) {
            cur[i] = k;
            self(self, i + 1, left - k);
        }
        cur[i] = 0;
    };
    rec(rec, 0, max_total);
    std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
        std::uint64_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    });
    return out;
}

}  // namespace arcinv
