#include <doctest.h>

#include "arcinv/error.hpp"
#include "arcinv/hickel.hpp"
#include "arcinv/morphisms.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const std::uint32_t chars[] = {0, 2, 3, 5};

std::vector<std::vector<Scalar>> coeffs(const Arc& a) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& s : a.series()) out.push_back(s.coefficients());
    return out;
}

Arc shifted(const Arc& a) {
    std::vector<TruncatedSeries> s;
    for (const auto& x : a.series()) s.push_back(x.recentered());
    return Arc(a.ring_ptr(), std::move(s));
}

RationalPoint negated(const RationalPoint& p) {
    std::vector<Scalar> c;
    for (const auto& x : p.coordinates()) c.push_back(-x);
    return RationalPoint(std::move(c));
}

// Algebra singular at p: every generator gets order >= weight there.
ReesAlgebra singular_at(Gen& g, const RingPtr& r, const RationalPoint& p, std::size_t gens, std::uint32_t max_w,
                        std::uint32_t max_extra) {
    std::vector<WeightedGenerator> out;
    while (out.size() < gens) {
        std::uint32_t w = static_cast<std::uint32_t>(g.range(1, max_w));
        Polynomial f = g.poly(r, 3, w + max_extra, w);
        if (f.is_zero()) continue;
        out.push_back({poly_translate(f, negated(p)), w});
    }
    return ReesAlgebra(r, std::move(out));
}

}  // namespace

TEST_CASE("order at a point: library against substitution, and valuation laws") {
    Gen g(11);
    for (std::uint32_t p : chars) {
        Field f = p ? F(p) : Q();
        auto r = ring(f, {"x", "y", "z"});
        for (int it = 0; it < 60; ++it) {
            Polynomial a = g.poly(r, 4, 4);
            Polynomial b = g.poly(r, 4, 4);
            RationalPoint x = g.point(f, 3);
            // bias toward points where a vanishes to some order
            if (g.coin()) a = poly_translate(g.poly(r, 3, 4, 1), negated(x));
            CAPTURE(a.to_string());
            CAPTURE(x.to_string());
            OrderValue oa = poly_order_at(a, x), ob = poly_order_at(b, x);
            CHECK(oa == naive_order(a, x));
            CHECK(ob == naive_order(b, x));
            OrderValue oab = poly_order_at(a * b, x);
            if (!a.is_zero() && !b.is_zero()) {
                CHECK(oab.value() == oa.value() + ob.value());
            }
            OrderValue sum = poly_order_at(a + b, x);
            if (!(a + b).is_zero() && !a.is_zero() && !b.is_zero()) {
                CHECK(sum.value() >= std::min(oa.value(), ob.value()));
            }
            if (oa.is_finite()) {
                CHECK(poly_order_at_least(a, x, oa.value()));
                CHECK_FALSE(poly_order_at_least(a, x, oa.value() + 1));
            }
        }
    }
}

TEST_CASE("Hasse derivatives: composition law and Pascal oracle") {
    Gen g(12);
    for (std::uint32_t p : chars) {
        Field f = p ? F(p) : Q();
        auto r = ring(f, {"x", "y"});
        for (int it = 0; it < 40; ++it) {
            Polynomial h = g.poly(r, 5, 9);
            std::uint32_t a = static_cast<std::uint32_t>(g.range(1, 4));
            std::uint32_t b = static_cast<std::uint32_t>(g.range(1, 4));
            std::size_t v = static_cast<std::size_t>(g.range(0, 1));
            CHECK(hasse_derivative(h, v, a) == naive_hasse(h, v, a));
            Polynomial lhs = hasse_derivative(hasse_derivative(h, v, b), v, a);
            Polynomial rhs = hasse_derivative(h, v, a + b) * binomial(f, a + b, a);
            CHECK(lhs == rhs);
            // operators in different variables commute
            CHECK(hasse_derivative(hasse_derivative(h, 0, a), 1, b) == hasse_derivative(hasse_derivative(h, 1, b), 0, a));
        }
    }
}

TEST_CASE("series evaluation: convolution oracle, translation and reparametrization") {
    Gen g(13);
    for (std::uint32_t p : chars) {
        Field f = p ? F(p) : Q();
        auto r = ring(f, {"x", "y"});
        for (int it = 0; it < 30; ++it) {
            Polynomial h = g.poly(r, 4, 4);
            RationalPoint c = g.point(f, 2);
            Arc a = g.arc_at(r, c, 10);
            TruncatedSeries e = series_eval(h, a.series());
            CHECK(e.coefficients() == naive_eval(h, coeffs(a)));
            // eval(f, phi) = eval(f(x + c), phi - c)
            CHECK(series_eval(poly_translate(h, c), shifted(a).series()) == e);
            OrderValue o = e.order();
            if (o.is_finite()) {
                for (std::size_t n : {2, 3}) {
                    Arc an = reparametrize(a, n);
                    OrderValue on = series_eval(h, an.series()).order();
                    CHECK(on == OrderValue::finite(n * o.value()));
                }
            }
        }
    }
}

TEST_CASE("Sing and order: saturation invariance over random algebras") {
    Gen g(14);
    for (std::uint32_t p : chars) {
        Field f = p ? F(p) : Q();
        auto r = ring(f, {"x", "y"});
        for (int it = 0; it < 25; ++it) {
            RationalPoint c = g.point(f, 2);
            ReesAlgebra alg = g.coin() ? singular_at(g, r, c, 2, 3, 2) : g.algebra(r, 2, 3, 4);
            ReesAlgebra d = diff_saturate(alg);
            CAPTURE(alg.to_string());
            bool in = in_singular_locus(alg, c);
            CHECK(in == naive_in_sing(alg, c));
            CHECK(in == !(order_at_point(alg, c) < RationalOrInfinity::ratio(1, 1)));
            CHECK(in_singular_locus(d, c) == in);
            if (in) CHECK(order_at_point(d, c) == order_at_point(alg, c));
            CHECK(canonicalize(diff_saturate(d)) == canonicalize(d));
        }
    }
}

TEST_CASE("transform_blowup divides exactly at singular centers") {
    Gen g(15);
    for (std::uint32_t p : chars) {
        Field f = p ? F(p) : Q();
        auto r = ring(f, {"x", "y", "z"});
        for (int it = 0; it < 15; ++it) {
            RationalPoint c = g.point(f, 3);
            ReesAlgebra alg = singular_at(g, r, c, 2, 3, 2);
            REQUIRE(in_singular_locus(alg, c));
            std::size_t chart = static_cast<std::size_t>(g.range(0, 2));
            ReesAlgebra t = transform_blowup(alg, c, chart);
            REQUIRE(t.size() == alg.size());
            for (std::size_t i = 0; i < t.size(); ++i) {
                Exponents e(3, 0);
                e[chart] = alg.generators()[i].weight;
                Polynomial back = t.generators()[i].poly * Polynomial::monomial(r, e, Scalar::one(f));
                CHECK(back == blowup_pullback(alg.generators()[i].poly, c, chart));
            }
        }
    }
}

TEST_CASE("arc orders: homogeneity, redundant products, pushforward") {
    Gen g(16);
    for (std::uint32_t p : chars) {
        Field f = p ? F(p) : Q();
        auto r = ring(f, {"x", "y"});
        for (int it = 0; it < 20; ++it) {
            RationalPoint c = g.point(f, 2);
            ReesAlgebra alg = singular_at(g, r, c, 2, 2, 2);
            Arc a = g.arc_at(r, c, 24);
            ArcOrder o = ord_rees_along_arc(a, alg);
            if (!o.is_finite()) continue;
            for (std::size_t n = 1; n <= 4; ++n) {
                CHECK(ord_rees_along_arc(reparametrize(a, n), alg) ==
                      ArcOrder::finite(o.value() * static_cast<unsigned long>(n)));
            }
            const auto& gens = alg.generators();
            ReesAlgebra more = alg;
            more.add({gens[0].poly * gens[1].poly, gens[0].weight + gens[1].weight});
            more.add({gens[0].poly.pow(2), 2 * gens[0].weight});
            CHECK(ord_rees_along_arc(a, more) == o);
        }
    }
    FiniteMorphismSpec spec(TriangularPresentation(Q(), {"s"}, {{"x", "x^2 - s^3"}}),
                            TriangularPresentation(Q(), {"s"}, {{"x", "x^2 - s^3"}, {"z", "z - s^2"}}), 1);
    Arc a = arc(spec.source().ring_ptr(), {"(t + t^2)^2", "(t + t^2)^3", "(t + t^2)^4"}, 12);
    REQUIRE(validate_on_variety(a, spec.source().defining_polynomials()));
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(pushforward(reparametrize(a, n), spec) == reparametrize(pushforward(a, spec), n));
    }
}

TEST_CASE("oracle equals floor(r) on random algebras") {
    Gen g(17);
    std::size_t conclusive = 0;
    std::size_t fractional = 0;
    for (std::uint32_t p : chars) {
        Field f = p ? F(p) : Q();
        auto r = ring(f, {"x", "y"});
        for (int it = 0; it < 40; ++it) {
            RationalPoint c = p ? g.point(f, 2) : pt(f, {g.range(-1, 1), g.range(-1, 1)});
            ReesAlgebra alg = diff_saturate(singular_at(g, r, c, 1, 3, 2));
            Arc a = g.arc_at(r, c, 40, 5);
            PersistenceReport rep = persistence_invariants(a, alg, c);
            if (rep.inconclusive || rep.r.value() > 5) continue;
            CAPTURE(alg.to_string());
            CAPTURE(a.to_string());
            OracleResult o = persistence_oracle(a, alg, c, 64);
            REQUIRE(o.dropped());
            CHECK(mpz_class(static_cast<unsigned long>(o.steps)) == *rep.rho);
            ++conclusive;
            if (rep.r.value().get_den() != 1) ++fractional;
        }
    }
    CHECK(conclusive >= 60);
    CHECK(fractional >= 5);
}

TEST_CASE("Nash first drop equals the oracle on plane branches") {
    Gen g(18);
    for (std::uint32_t p : {0u, 3u, 5u, 7u}) {
        Field f = p ? F(p) : Q();
        auto r = ring(f, {"x", "y"});
        for (int it = 0; it < 10; ++it) {
            long a = g.range(2, 4), b = g.range(a + 1, 7);
            // branch (u^b, u^a) with u = t + c t^2; F = x^a - y^b vanishes on it.
            TruncatedSeries u = series(f, "t", 40) + series(f, "t^2", 40) * k(f, g.range(-2, 2));
            Arc phi(r, {u.pow(static_cast<std::uint32_t>(b)), u.pow(static_cast<std::uint32_t>(a))});
            Polynomial F0 = P(r, "x^" + std::to_string(a) + " - y^" + std::to_string(b));
            RationalPoint o = pt(f, {0, 0});
            if (p && (a % p == 0 || b % p == 0)) continue;
            NashSequence n = nash_sequence_hypersurface(phi, F0, o);
            OracleResult h = persistence_oracle(phi, diff_saturate(ReesAlgebra(r, {{F0, static_cast<std::uint32_t>(a)}})), o);
            CAPTURE(F0.to_string());
            REQUIRE(h.dropped());
            CHECK(n.first_drop() == h.steps);
            for (std::size_t i = 1; i < n.multiplicities.size(); ++i) {
                CHECK(n.multiplicities[i] <= n.multiplicities[i - 1]);
                CHECK(n.multiplicities[i] >= 1);
            }
        }
    }
}

TEST_CASE("Sing enumeration matches a naive grid scan") {
    Gen g(19);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        Field f = F(p);
        for (std::size_t dim = 1; dim <= 3; ++dim) {
            std::vector<std::string> vars{"x", "y", "z"};
            vars.resize(dim);
            auto r = ring(f, vars);
            for (int it = 0; it < 4; ++it) {
                ReesAlgebra alg = g.algebra(r, 2, 3, 4);
                CHECK(singular_locus_enumerate(alg) == naive_sing(alg));
            }
        }
    }
}
