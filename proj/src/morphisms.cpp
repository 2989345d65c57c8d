#include "arcinv/morphisms.hpp"

#include <algorithm>
#include <cstdlib>

#include "arcinv/error.hpp"

namespace arcinv {

ReesAlgebra local_presentation(const TriangularPresentation& p) {
    ReesAlgebra g(p.ring_ptr());
    for (const auto& layer : p.tower()) g.add({layer.poly, layer.degree});
    return diff_saturate(g);
}

std::uint64_t generic_rank(const FiniteMorphismSpec& spec) {
    std::uint64_t r = 1;
    for (const auto& layer : spec.extra_layers()) r *= layer.degree;
    if (r != spec.declared_rank()) {
        throw Error(ErrorKind::Validation, "declared rank " + std::to_string(spec.declared_rank()) +
                                               " but the extra layers have degree product " + std::to_string(r));
    }
    return r;
}

// --- transversality ---------------------------------------------------------

bool TransversalityReport::pass() const {
    for (const auto& i : items) {
        if (!i.pass) return false;
    }
    return !locus || locus->equal();
}

TransversalityReport transversality_check(const FiniteMorphismSpec& spec, const std::vector<RationalPoint>& points,
                                          const std::vector<NamedArc>& arcs, const EnumerationBudget& budget) {
    TransversalityReport rep;
    ReesAlgebra gs = local_presentation(spec.source());
    ReesAlgebra gt = local_presentation(spec.target());
    for (const auto& pt : points) {
        bool in_s = in_singular_locus(gs, pt);
        rep.items.push_back({"source point " + pt.to_string() + " in Sing(G_X')", in_s,
                             "ord = " + order_at_point(gs, pt).to_string()});
        RationalPoint image = spec.project(pt);
        bool in_t = in_singular_locus(gt, image);
        rep.items.push_back({"image " + image.to_string() + " in Sing(G_X)", in_t,
                             "ord = " + order_at_point(gt, image).to_string()});
    }
    for (const auto& na : arcs) {
        Arc down = pushforward(na.arc, spec);
        OrderValue a = nu_t(na.arc, na.arc.center());
        OrderValue b = nu_t(down, down.center());
        rep.items.push_back({"nu_t preserved along " + na.id, a == b,
                             "nu_t(source) = " + a.to_string() + ", nu_t(target) = " + b.to_string()});
    }
    const Field& field = spec.source().ring().field();
    if (field.is_prime_field()) {
        LocusComparison lc;
        lc.characteristic = field.characteristic();
        lc.source_sing = singular_locus_enumerate(gs, budget);
        std::set<RationalPoint> target_sing = singular_locus_enumerate(gt, budget);
        // beta^-1(Sing G_X) restricted to the points of X'.
        ReesAlgebra on_source(spec.source().ring_ptr());
        for (const auto& f : spec.source().defining_polynomials()) on_source.add({f, 1});
        for (const auto& pt : singular_locus_enumerate(on_source, budget)) {
            if (target_sing.count(spec.project(pt)) != 0) lc.preimage.insert(pt);
        }
        rep.locus = std::move(lc);
    }
    return rep;
}

// --- Zariski fibers ---------------------------------------------------------

std::uint64_t factor_budget_from_env() {
    if (const char* v = std::getenv("ARCINV_FACTOR_BUDGET")) return std::strtoull(v, nullptr, 10);
    return 1u << 20;
}

namespace {

using Dense = std::vector<std::uint32_t>;

void trim(Dense& g) {
    while (g.size() > 1 && g.back() == 0) g.pop_back();
}

// g = q h + r with h monic; returns r, overwrites g with q.
bool divides_mod_p(Dense& g, const Dense& h, std::uint32_t p) {
    std::size_t dg = g.size() - 1, dh = h.size() - 1;
    if (dg < dh) return false;
    Dense r = g;
    Dense q(dg - dh + 1, 0);
    for (std::size_t i = dg + 1; i-- > dh;) {
        std::uint64_t c = r[i];
        if (c == 0) continue;
        q[i - dh] = static_cast<std::uint32_t>(c);
        for (std::size_t j = 0; j <= dh; ++j) {
            std::uint64_t sub = (c * h[j]) % p;
            r[i - dh + j] = static_cast<std::uint32_t>((r[i - dh + j] + p - sub) % p);
        }
    }
    for (std::size_t i = 0; i < dh; ++i) {
        if (r[i] != 0) return false;
    }
    g = std::move(q);
    return true;
}

mpq_class horner(const std::vector<mpq_class>& g, const mpq_class& r) {
    mpq_class acc = 0;
    for (std::size_t i = g.size(); i-- > 0;) acc = acc * r + g[i];
    return acc;
}

std::vector<mpq_class> synthetic_divide(const std::vector<mpq_class>& g, const mpq_class& r) {
    std::vector<mpq_class> q(g.size() - 1);
    mpq_class carry = 0;
    for (std::size_t i = g.size(); i-- > 1;) {
        carry = carry * r + g[i];
        q[i - 1] = carry;
    }
    return q;
}

std::vector<mpz_class> divisors(mpz_class n, std::uint64_t& budget) {
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (budget-- == 0) throw Error(ErrorKind::Budget, "factorization budget exhausted");
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

std::vector<FiberFactor> factor_rational(std::vector<mpq_class> g, const Field& field, std::uint64_t budget) {
    std::vector<FiberFactor> out;
    auto linear = [&](const mpq_class& root) {
        return std::vector<Scalar>{Scalar::from_rational(field, -root), Scalar::one(field)};
    };
    std::uint32_t zero_mult = 0;
    while (g.size() > 1 && g.front() == 0) {
        g.erase(g.begin());
        ++zero_mult;
    }
    if (zero_mult != 0) out.push_back({linear(0), zero_mult});
    if (g.size() > 1) {
        mpz_class den = 1;
        for (const auto& c : g) den = lcm(den, mpz_class(c.get_den()));
        mpz_class c0 = mpz_class(g.front() * den);
        std::vector<mpz_class> ps = divisors(c0, budget);
        std::vector<mpz_class> qs = divisors(den, budget);
        std::vector<mpq_class> candidates;
        for (const auto& p : ps) {
            for (const auto& q : qs) {
                mpq_class r(p, q);
                r.canonicalize();
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& r : candidates) {
            std::uint32_t e = 0;
            while (g.size() > 1 && horner(g, r) == 0) {
                g = synthetic_divide(g, r);
                ++e;
            }
            if (e != 0) out.push_back({linear(r), e});
        }
    }
    std::size_t rest = g.size() - 1;
    if (rest >= 4) {
        throw Error(ErrorKind::InvalidArgument, "fiber polynomial has a factor of degree " + std::to_string(rest) +
                                                    " without rational roots; cannot factor over Q");
    }
    if (rest >= 1) {
        // No rational roots and degree <= 3: irreducible.
        std::vector<Scalar> c;
        for (const auto& x : g) c.push_back(Scalar::from_rational(field, x));
        out.push_back({std::move(c), 1});
    }
    return out;
}

}  // namespace

std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> factor_mod_p(std::vector<std::uint32_t> g,
                                                                              std::uint32_t p,
                                                                              std::uint64_t budget) {
    trim(g);
    if (g.empty() || g.back() != 1) throw Error(ErrorKind::InvalidArgument, "factor_mod_p needs a monic polynomial");
    std::vector<std::pair<Dense, std::uint32_t>> out;
    for (std::size_t d = 1; 2 * d <= g.size() - 1; ++d) {
        // Every monic polynomial of degree d; factors of lower degree are
        // already removed, so each divisor found here is irreducible.
        Dense h(d + 1, 0);
        h[d] = 1;
        while (true) {
            if (budget-- == 0) throw Error(ErrorKind::Budget, "factorization budget exhausted");
            std::uint32_t e = 0;
            while (divides_mod_p(g, h, p)) ++e;
            if (e != 0) out.emplace_back(h, e);
            if (2 * d > g.size() - 1) break;
            std::size_t i = 0;
            while (i < d && ++h[i] == p) h[i++] = 0;
            if (i == d) break;
        }
    }
    if (g.size() > 1) out.emplace_back(g, 1);
    return out;
}

ZariskiReport zariski_fiber_check(const Polynomial& f, std::size_t x, std::size_t y, const Scalar& a,
                                  std::uint64_t budget) {
    const Ring& ring = f.ring();
    const Field& field = ring.field();
    if (x >= ring.size() || y >= ring.size() || x == y) {
        throw Error(ErrorKind::InvalidArgument, "zariski check needs two distinct variables");
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (i != x && i != y && f.involves(i)) {
            throw Error(ErrorKind::InvalidArgument, "polynomial " + f.to_string() + " involves '" +
                                                        ring.variables()[i] + "' besides the curve variables");
        }
    }
    std::uint32_t deg = f.degree_in(y);
    if (f.is_zero() || !(f.coefficient_in(y, deg) == Polynomial::constant(f.ring_ptr(), 1))) {
        throw Error(ErrorKind::InvalidArgument, f.to_string() + " is not monic in '" + ring.variables()[y] + "'");
    }
    if (deg == 0) throw Error(ErrorKind::InvalidArgument, "curve has degree 0 in '" + ring.variables()[y] + "'");

    std::vector<Scalar> fiber(deg + 1, Scalar::zero(field));
    for (const auto& [e, c] : f.terms()) fiber[e[y]] += c * a.pow(e[x]);

    ZariskiReport rep;
    rep.fiber = a;
    rep.degree = deg;
    if (field.is_prime_field()) {
        Dense g;
        for (const auto& c : fiber) g.push_back(c.residue());
        for (auto& [h, e] : factor_mod_p(std::move(g), field.characteristic(), budget)) {
            std::vector<Scalar> c;
            for (auto v : h) c.push_back(Scalar::from_int(field, v));
            rep.factors.push_back({std::move(c), e});
        }
    } else {
        std::vector<mpq_class> g;
        for (const auto& c : fiber) g.push_back(c.rational());
        rep.factors = factor_rational(std::move(g), field, budget);
    }
    for (const auto& fac : rep.factors) rep.sum += static_cast<std::uint64_t>(fac.exponent) * fac.degree();
    return rep;
}

// --- persistence comparison ---------------------------------------------------

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::AllEqual: return "AllEqual";
        case Verdict::Mismatch: return "Mismatch";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

bool oracle_disagrees(const std::optional<OracleResult>& o, const PersistenceReport& rep) {
    if (!o || !o->dropped() || rep.inconclusive) return false;
    return mpz_class(static_cast<unsigned long>(o->steps)) != *rep.rho;
}

}  // namespace

ComparisonReport persistence_compare(const FiniteMorphismSpec& spec, const std::vector<NamedArc>& arcs,
                                     const CompareOptions& options) {
    ReesAlgebra gs = local_presentation(spec.source());
    ReesAlgebra gt = local_presentation(spec.target());
    ComparisonReport rep;
    bool any_inconclusive = false;
    for (const auto& na : arcs) {
        ComparisonRow row;
        row.arc_id = na.id;
        RationalPoint xs = na.arc.center();
        Arc down = pushforward(na.arc, spec);
        RationalPoint xt = down.center();
        row.source = persistence_invariants(na.arc, gs, xs);
        if (options.oracle) row.source_oracle = persistence_oracle(na.arc, gs, xs, options.max_steps);
        if (!in_singular_locus(gt, xt)) {
            // rho' is defined but the image left the top locus of X.
            row.verdict = Verdict::Mismatch;
            row.note = "image center " + xt.to_string() + " is not in Sing(G_X)";
        } else {
            row.target = persistence_invariants(down, gt, xt);
            if (options.oracle) row.target_oracle = persistence_oracle(down, gt, xt, options.max_steps);
            if (row.source.inconclusive || row.target.inconclusive) {
                row.verdict = Verdict::Inconclusive;
                row.note = "retry at precision " + std::to_string(2 * na.arc.precision());
            } else if (*row.source.rho != *row.target.rho) {
                row.verdict = Verdict::Mismatch;
            } else {
                row.verdict = Verdict::AllEqual;
            }
            if (oracle_disagrees(row.source_oracle, row.source) || oracle_disagrees(row.target_oracle, row.target)) {
                row.verdict = Verdict::Mismatch;
                row.note = "oracle and formula disagree";
            }
        }
        if (row.verdict == Verdict::Mismatch && !rep.witness) rep.witness = rep.rows.size();
        if (row.verdict == Verdict::Inconclusive) any_inconclusive = true;
        rep.rows.push_back(std::move(row));
    }
    if (rep.witness) {
        rep.verdict = Verdict::Mismatch;
    } else if (any_inconclusive) {
        rep.verdict = Verdict::Inconclusive;
    } else {
        rep.verdict = Verdict::AllEqual;
    }
    return rep;
}

ArcwiseReport arcwise_order_equality(const ReesAlgebra& g1, const ReesAlgebra& g2, const std::vector<NamedArc>& arcs) {
    if (!(g1.ring() == g2.ring())) throw Error(ErrorKind::DimensionMismatch, "algebras over different rings");
    for (const auto& gen : g1.generators()) {
        if (std::find(g2.generators().begin(), g2.generators().end(), gen) == g2.generators().end()) {
            throw Error(ErrorKind::Precondition, "generator (" + gen.poly.to_string() + ", " +
                                                     std::to_string(gen.weight) + ") of G1 is not in G2");
        }
    }
    ArcwiseReport rep;
    for (const auto& na : arcs) {
        ArcwiseRow row{na.id, ord_rees_along_arc(na.arc, g1), ord_rees_along_arc(na.arc, g2)};
        if (row.order1.is_inconclusive() || row.order2.is_inconclusive()) {
            row.relation = ArcwiseRow::Relation::Inconclusive;
        } else if (row.order1 == row.order2) {
            row.relation = ArcwiseRow::Relation::Equal;
        } else {
            row.relation = ArcwiseRow::Relation::Strict;
            if (!rep.witness) rep.witness = rep.rows.size();
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace arcinv
