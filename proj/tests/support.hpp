#ifndef ARCINV_TESTS_SUPPORT_HPP
#define ARCINV_TESTS_SUPPORT_HPP

// Builders, hand-rolled generators and slow independent oracles for tests.
// Nothing here calls the library's order, translation or evaluation code.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "arcinv/arcs.hpp"
#include "arcinv/polynomial.hpp"
#include "arcinv/rees.hpp"
#include "arcinv/series.hpp"

namespace testing {

using namespace arcinv;

inline Field Q() { return Field::rationals(); }
inline Field F(std::uint32_t p) { return Field::with_characteristic(p); }

inline Scalar k(const Field& f, long v) { return Scalar::from_int(f, v); }

inline RingPtr ring(const Field& f, std::vector<std::string> vars) { return make_ring(f, std::move(vars)); }

inline Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

inline RationalPoint pt(const Field& f, std::vector<long> c) {
    std::vector<Scalar> s;
    for (long v : c) s.push_back(k(f, v));
    return RationalPoint(std::move(s));
}

// Series from a polynomial in t, e.g. "t^3 + 2*t^5".
inline TruncatedSeries series(const Field& f, const std::string& text, std::size_t n) {
    RingPtr tr = make_ring(f, {"t"});
    Polynomial p = parse_polynomial(tr, text);
    std::vector<Scalar> c(n, Scalar::zero(f));
    for (const auto& [e, v] : p.terms()) {
        if (e[0] < n) c[e[0]] = v;
    }
    return TruncatedSeries(f, std::move(c), n);
}

inline Arc arc(const RingPtr& r, const std::vector<std::string>& comps, std::size_t n) {
    std::vector<TruncatedSeries> s;
    for (const auto& c : comps) s.push_back(series(r->field(), c, n));
    return Arc(r, std::move(s));
}

inline WeightedGenerator gen(const RingPtr& r, const std::string& s, std::uint32_t w) { return {P(r, s), w}; }

// --- independent oracles ------------------------------------------------------

// nu_p(f) through substitution x_i -> x_i + p_i done with compose().
inline OrderValue naive_order(const Polynomial& f, const RationalPoint& p) {
    if (f.is_zero()) return OrderValue::infinity();
    std::vector<Polynomial> shift;
    for (std::size_t i = 0; i < p.size(); ++i) {
        shift.push_back(Polynomial::variable(f.ring_ptr(), i) + Polynomial::constant(f.ring_ptr(), p[i]));
    }
    Polynomial g = f.compose(shift);
    std::uint64_t best = UINT64_MAX;
    for (const auto& [e, c] : g.terms()) best = std::min(best, total_degree(e));
    return OrderValue::finite(best);
}

// Truncated convolution on raw coefficient vectors.
inline std::vector<Scalar> mul_trunc(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> out(a.size(), Scalar::zero(a.front().field()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline std::vector<Scalar> naive_eval(const Polynomial& f, const std::vector<std::vector<Scalar>>& phi) {
    const Field& fd = f.field();
    std::size_t n = phi.front().size();
    std::vector<Scalar> acc(n, Scalar::zero(fd));
    for (const auto& [e, c] : f.terms()) {
        std::vector<Scalar> m(n, Scalar::zero(fd));
        m[0] = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::uint32_t j = 0; j < e[i]; ++j) m = mul_trunc(m, phi[i]);
        }
        for (std::size_t i = 0; i < n; ++i) acc[i] += m[i];
    }
    return acc;
}

// C(n, k) in the field by Pascal's rule, no factorials.
inline Scalar pascal(const Field& f, std::uint32_t n, std::uint32_t kk) {
    if (kk > n) return Scalar::zero(f);
    std::vector<Scalar> row{Scalar::one(f)};
    for (std::uint32_t i = 1; i <= n; ++i) {
        std::vector<Scalar> next(i + 1, Scalar::one(f));
        for (std::uint32_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[kk];
}

inline Polynomial naive_hasse(const Polynomial& f, std::size_t var, std::uint32_t a) {
    Polynomial out(f.ring_ptr());
    for (const auto& [e, c] : f.terms()) {
        if (e[var] < a) continue;
        Exponents d = e;
        d[var] -= a;
        out.add_term(d, c * pascal(f.field(), e[var], a));
    }
    return out;
}

inline bool naive_in_sing(const ReesAlgebra& g, const RationalPoint& p) {
    for (const auto& w : g.generators()) {
        OrderValue o = naive_order(w.poly, p);
        if (o.is_finite() && o.value() < w.weight) return false;
    }
    return true;
}

inline std::vector<RationalPoint> grid(const Field& f, std::size_t dim) {
    std::uint32_t p = f.characteristic();
    std::vector<RationalPoint> out;
    std::vector<long> c(dim, 0);
    while (true) {
        out.push_back(pt(f, c));
        std::size_t i = 0;
        while (i < dim && ++c[i] == static_cast<long>(p)) c[i++] = 0;
        if (i == dim) break;
    }
    return out;
}

inline std::set<RationalPoint> naive_sing(const ReesAlgebra& g) {
    std::set<RationalPoint> out;
    for (const auto& p : grid(g.ring().field(), g.ring().size())) {
        if (naive_in_sing(g, p)) out.insert(p);
    }
    return out;
}

// --- generators ---------------------------------------------------------------

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    bool coin(int num = 1, int den = 2) { return range(0, den - 1) < num; }

    Scalar scalar(const Field& f, long lo = -3, long hi = 3) {
        Scalar s = k(f, range(lo, hi));
        if (f.characteristic() == 0 && coin(1, 5)) s /= k(f, range(1, 3));
        return s;
    }

    Scalar nonzero(const Field& f) {
        for (;;) {
            Scalar s = scalar(f);
            if (!s.is_zero()) return s;
        }
    }

    Polynomial poly(const RingPtr& r, std::size_t max_terms, std::uint32_t max_deg, std::uint32_t min_deg = 0) {
        Polynomial p(r);
        std::size_t n = static_cast<std::size_t>(range(1, static_cast<long>(max_terms)));
        for (std::size_t t = 0; t < n; ++t) {
            Exponents e(r->size(), 0);
            std::uint32_t d = static_cast<std::uint32_t>(range(min_deg, max_deg));
            for (std::uint32_t j = 0; j < d; ++j) e[static_cast<std::size_t>(range(0, static_cast<long>(r->size()) - 1))]++;
            p.add_term(e, nonzero(r->field()));
        }
        return p;
    }

    RationalPoint point(const Field& f, std::size_t dim) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < dim; ++i) c.push_back(f.characteristic() ? k(f, range(0, f.characteristic() - 1)) : scalar(f, -2, 2));
        return RationalPoint(std::move(c));
    }

    // Arc with the given center; every coordinate gets a nonzero t^j, j <= 4.
    Arc arc_at(const RingPtr& r, const RationalPoint& c, std::size_t n, std::size_t max_deg = 6) {
        std::vector<TruncatedSeries> s;
        for (std::size_t i = 0; i < r->size(); ++i) {
            std::vector<Scalar> co(std::min(n, max_deg + 1), Scalar::zero(r->field()));
            co[0] = c[i];
            for (std::size_t j = 1; j < co.size(); ++j) {
                if (coin(1, 3)) co[j] = scalar(r->field(), -2, 2);
            }
            co[static_cast<std::size_t>(range(1, 4))] = nonzero(r->field());
            s.emplace_back(r->field(), std::move(co), n);
        }
        return Arc(r, std::move(s));
    }

    ReesAlgebra algebra(const RingPtr& r, std::size_t gens, std::uint32_t max_weight, std::uint32_t max_deg) {
        std::vector<WeightedGenerator> g;
        while (g.size() < gens) {
            Polynomial f = poly(r, 3, max_deg);
            if (f.is_zero()) continue;
            g.push_back({f, static_cast<std::uint32_t>(range(1, max_weight))});
        }
        return ReesAlgebra(r, std::move(g));
    }
};

}  // namespace testing

#endif  // ARCINV_TESTS_SUPPORT_HPP
