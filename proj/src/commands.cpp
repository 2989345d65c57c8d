#include "arcinv/commands.hpp"

#include <sstream>

#include "arcinv/error.hpp"
#include "arcinv/hickel.hpp"
#include "arcinv/morphisms.hpp"
#include "arcinv/suite.hpp"

namespace arcinv {

namespace {

constexpr Provenance F = Provenance::Formula;
constexpr Provenance O = Provenance::Oracle;
constexpr Provenance B = Provenance::BruteForce;

Cell integer(std::uint64_t v, Provenance p) { return Cell::integer(mpz_class(static_cast<unsigned long>(v)), p); }

std::string join_points(const std::set<RationalPoint>& pts) {
    std::string s;
    for (const auto& p : pts) {
        if (!s.empty()) s += " ";
        s += p.to_string();
    }
    return s.empty() ? "{}" : s;
}

std::string dense_string(const std::vector<Scalar>& c, const std::string& var) {
    RingPtr ring = make_ring(c.front().field(), {var});
    Polynomial p(ring);
    for (std::size_t i = 0; i < c.size(); ++i) p.add_term(Exponents{static_cast<std::uint32_t>(i)}, c[i]);
    return p.to_string();
}

const Scenario& need(const Scenario* sc, const std::string& command) {
    if (sc == nullptr) throw Error(ErrorKind::InvalidArgument, "'" + command + "' needs a scenario file");
    return *sc;
}

std::size_t steps_for(const Scenario& sc, const RunOptions& o) { return o.max_steps.value_or(sc.defaults.max_steps); }

Arc arc_for(const Scenario& sc, const ArcSpec& a, const RunOptions& o) {
    return materialize(a, sc.ring, arc_precision(a, sc.defaults, o.precision));
}

void require_on_variety(const Scenario& sc, const Arc& arc, const std::string& name) {
    auto defining = sc.variety_polynomials();
    if (defining.empty()) return;
    VarietyCheck c = validate_on_variety(arc, defining);
    if (!c) {
        throw Error(ErrorKind::Validation, "arc '" + name + "' is not on the variety: " +
                                               defining[*c.polynomial].to_string() + " has nonzero t^" +
                                               std::to_string(*c.coefficient) + " coefficient");
    }
}

Cell oracle_cell(const OracleResult& o) {
    if (o.dropped()) return integer(o.steps, O);
    return Cell::text(to_string(o.kind) + "(" + std::to_string(o.steps) + ")");
}

void trace_rows(Report& rep, const std::string& algebra, const std::string& arc, const OracleResult& o,
                const Ring& ring) {
    // The trace ring has the extra line variable last.
    std::vector<std::string> vars = ring.variables();
    for (const auto& s : o.trace) {
        ReportRow row{"trace", {}};
        row.add("algebra", Cell::text(algebra)).add("arc", Cell::text(arc)).add("step", integer(s.step, O));
        std::string chart = "-";
        if (s.chart) chart = *s.chart < vars.size() ? vars[*s.chart] : "line";
        row.add("chart", Cell::text(chart)).add("center", Cell::text(s.center.to_string()));
        std::string gens;
        for (const auto& v : s.generator_orders) gens += (gens.empty() ? "" : ",") + v.to_string();
        row.add("generator_orders", Cell::text(gens)).add("ord", Cell::from(s.order, O));
        row.add("in_sing", Cell::boolean(s.in_sing));
        rep.rows.push_back(std::move(row));
    }
}

// --- order ------------------------------------------------------------------

void cmd_order(Report& rep, const Scenario& sc, const RunOptions& o) {
    for (const auto& [name, g] : sc.algebras) {
        for (const auto& pt : sc.points) {
            ReportRow row{"point-order", {}};
            row.add("algebra", Cell::text(name)).add("point", Cell::text(pt.name + "=" + pt.point.to_string()));
            row.add("ord", Cell::from(order_at_point(g, pt.point), F));
            row.add("in_sing", Cell::boolean(in_singular_locus(g, pt.point)));
            rep.rows.push_back(std::move(row));
        }
        for (const auto& a : sc.arcs) {
            Arc arc = arc_for(sc, a, o);
            ArcOrder r = ord_rees_along_arc(arc, g);
            ReportRow row{"arc-order", {}};
            row.add("algebra", Cell::text(name)).add("arc", Cell::text(a.name));
            row.add("precision", integer(arc.precision(), Provenance::None)).add("ord_t", Cell::from(r, F));
            rep.rows.push_back(std::move(row));
            if (r.is_inconclusive()) rep.escalate(ExitStatus::Inconclusive);
        }
    }
}

// --- sing -------------------------------------------------------------------

void cmd_sing(Report& rep, const Scenario& sc, const RunOptions&) {
    for (const auto& [name, g] : sc.algebras) {
        ReesAlgebra d = diff_saturate(g);
        if (sc.field.is_prime_field()) {
            EnumerationBudget budget = enumeration_budget_from_env();
            auto s1 = singular_locus_enumerate(g, budget);
            auto s2 = singular_locus_enumerate(d, budget);
            for (int which = 0; which < 2; ++which) {
                const auto& s = which == 0 ? s1 : s2;
                ReportRow row{"sing", {}};
                row.add("algebra", Cell::text(which == 0 ? name : "Diff(" + name + ")"));
                row.add("field", Cell::text(sc.field.name())).add("count", integer(s.size(), B));
                row.add("points", Cell::text(join_points(s)));
                rep.rows.push_back(std::move(row));
            }
            if (s1 != s2) {
                rep.escalate(ExitStatus::Mismatch);
                rep.notes.push_back("Sing(" + name + ") differs from Sing(Diff(" + name + "))");
            }
        }
        for (const auto& pt : sc.points) {
            ReportRow row{"sing-point", {}};
            row.add("algebra", Cell::text(name)).add("point", Cell::text(pt.name + "=" + pt.point.to_string()));
            bool a = in_singular_locus(g, pt.point), b = in_singular_locus(d, pt.point);
            row.add("in_sing", Cell::boolean(a)).add("in_sing_diff", Cell::boolean(b));
            row.add("ord", Cell::from(order_at_point(g, pt.point), F));
            rep.rows.push_back(std::move(row));
            if (a != b) rep.escalate(ExitStatus::Mismatch);
        }
    }
}

// --- diff -------------------------------------------------------------------

void cmd_diff(Report& rep, const Scenario& sc, const RunOptions&) {
    for (const auto& [name, g] : sc.algebras) {
        ReesAlgebra d = canonicalize(diff_saturate(g));
        for (const auto& gen : d.generators()) {
            ReportRow row{"generator", {}};
            row.add("algebra", Cell::text("Diff(" + name + ")")).add("poly", Cell::text(gen.poly.to_string()));
            row.add("weight", integer(gen.weight, F));
            rep.rows.push_back(std::move(row));
        }
    }
}

// --- nash -------------------------------------------------------------------

void cmd_nash(Report& rep, const Scenario& sc, const RunOptions& o) {
    if (!sc.hypersurface) throw Error(ErrorKind::InvalidArgument, "'nash' needs a 'hypersurface' entry");
    const Polynomial& f = sc.polynomial(*sc.hypersurface);
    std::size_t steps = steps_for(sc, o);
    std::vector<std::string> vars = sc.ring->variables();
    for (const auto& a : sc.arcs) {
        Arc arc = arc_for(sc, a, o);
        require_on_variety(sc, arc, a.name);
        NashSequence ns = nash_sequence_hypersurface(arc, f, arc.center(), steps);
        std::string seq;
        for (auto m : ns.multiplicities) seq += (seq.empty() ? "" : ",") + std::to_string(m);
        ReportRow row{"nash", {}};
        row.add("arc", Cell::text(a.name)).add("precision", integer(arc.precision(), Provenance::None));
        row.add("sequence", Cell::text(seq)).add("outcome", Cell::text(to_string(ns.kind)));
        auto drop = ns.first_drop();
        row.add("persistence", drop ? integer(*drop, O) : Cell::text("undefined"));
        rep.rows.push_back(std::move(row));
        for (std::size_t i = 0; i < ns.multiplicities.size(); ++i) {
            ReportRow step{"nash-step", {}};
            step.add("arc", Cell::text(a.name)).add("step", integer(i, O));
            std::string chart = "-";
            if (i > 0) chart = ns.charts[i - 1] < vars.size() ? vars[ns.charts[i - 1]] : "line";
            step.add("chart", Cell::text(chart)).add("multiplicity", integer(ns.multiplicities[i], O));
            rep.rows.push_back(std::move(step));
        }
        if (ns.kind != OracleResult::Kind::Dropped) {
            rep.escalate(ExitStatus::Inconclusive);
            rep.notes.push_back(a.name + ": " + ns.message);
        }
    }
}

// --- persist ----------------------------------------------------------------

void persist_row(Report& rep, const std::string& gname, const ReesAlgebra& g, const std::string& aname,
                 const Arc& arc, const Scenario& sc, const RunOptions& o) {
    RationalPoint xi = arc.center();
    ReportRow row{"persistence", {}};
    row.add("algebra", Cell::text(gname)).add("arc", Cell::text(aname)).add("center", Cell::text(xi.to_string()));
    row.add("precision", integer(arc.precision(), Provenance::None));
    if (!in_singular_locus(g, xi)) {
        row.add("note", Cell::text("center not in Sing"));
        rep.rows.push_back(std::move(row));
        return;
    }
    PersistenceReport pr = persistence_invariants(arc, g, xi);
    row.add("r", Cell::from(pr.r, F));
    row.add("rho", pr.rho ? Cell::integer(*pr.rho, F) : Cell::text("undefined"));
    row.add("nu_t", Cell::from(pr.nu_t, F));
    row.add("r_bar", pr.r_bar ? Cell::rational(*pr.r_bar, F) : Cell::text("undefined"));
    row.add("rho_bar", pr.rho_bar ? Cell::rational(*pr.rho_bar, F) : Cell::text("undefined"));
    if (pr.inconclusive) {
        rep.escalate(ExitStatus::Inconclusive);
        rep.notes.push_back(aname + ": " + pr.note + "; retry with --precision " + std::to_string(pr.retry_precision));
    }
    std::optional<OracleResult> oracle;
    if (o.oracle) {
        oracle = persistence_oracle(arc, g, xi, steps_for(sc, o));
        row.add("oracle", oracle_cell(*oracle));
        if (oracle->dropped() && pr.rho) {
            bool agree = mpz_class(static_cast<unsigned long>(oracle->steps)) == *pr.rho;
            row.add("agree", Cell::boolean(agree));
            if (!agree) rep.escalate(ExitStatus::Mismatch);
        } else {
            // At least one side is undefined at this precision.
            if (oracle->dropped() != pr.rho.has_value()) row.add("agree", Cell::boolean(false));
            rep.escalate(ExitStatus::Inconclusive);
            if (!oracle->dropped()) rep.notes.push_back(aname + ": oracle " + oracle->message);
        }
    }
    rep.rows.push_back(std::move(row));
    if (oracle) trace_rows(rep, gname, aname, *oracle, g.ring());
}

void cmd_persist(Report& rep, const Scenario& sc, const RunOptions& o) {
    std::vector<Arc> arcs;
    for (const auto& a : sc.arcs) {
        arcs.push_back(arc_for(sc, a, o));
        require_on_variety(sc, arcs.back(), a.name);
    }
    if (sc.algebras.empty()) {
        if (!sc.hypersurface) throw Error(ErrorKind::InvalidArgument, "'persist' needs an algebra or a hypersurface");
        // G = Diff(<(F, m)>) with m the multiplicity at each arc's center.
        const Polynomial& f = sc.polynomial(*sc.hypersurface);
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            OrderValue m = poly_order_at(f, arcs[i].center());
            if (!m.is_finite() || m.value() == 0) {
                throw Error(ErrorKind::Validation, "arc '" + sc.arcs[i].name + "' is not centered on the hypersurface");
            }
            ReesAlgebra g = diff_saturate(ReesAlgebra(sc.ring, {{f, static_cast<std::uint32_t>(m.value())}}));
            persist_row(rep, "Diff(" + *sc.hypersurface + "," + std::to_string(m.value()) + ")", g, sc.arcs[i].name,
                        arcs[i], sc, o);
        }
        return;
    }
    for (const auto& [name, g0] : sc.algebras) {
        ReesAlgebra g = diff_saturate(g0);
        for (std::size_t i = 0; i < arcs.size(); ++i) persist_row(rep, "Diff(" + name + ")", g, sc.arcs[i].name, arcs[i], sc, o);
    }
}

// --- compare ----------------------------------------------------------------

Cell rho_cell(const PersistenceReport& p) { return p.rho ? Cell::integer(*p.rho, F) : Cell::text("undefined"); }

void cmd_compare(Report& rep, const Scenario& sc, const RunOptions& o) {
    if (!sc.morphism) throw Error(ErrorKind::InvalidArgument, "'compare' needs a 'morphism' section");
    const auto& m = *sc.morphism;
    std::uint64_t rank = generic_rank(m.spec);
    rep.rows.push_back(ReportRow{"morphism", {}}
                           .add("target_vars", Cell::text(std::to_string(m.spec.target().ring().size())))
                           .add("source_vars", Cell::text(std::to_string(m.spec.source().ring().size())))
                           .add("generic_rank", integer(rank, F)));
    std::vector<NamedArc> arcs;
    for (const auto& a : m.arcs) {
        arcs.push_back({a.name, materialize(a, m.spec.source().ring_ptr(),
                                            arc_precision(a, sc.defaults, o.precision))});
    }
    std::vector<RationalPoint> pts;
    for (const auto& p : m.points) pts.push_back(p.point);
    TransversalityReport tr = transversality_check(m.spec, pts, arcs);
    for (const auto& item : tr.items) {
        rep.rows.push_back(ReportRow{"transversality", {}}
                               .add("check", Cell::text(item.label))
                               .add("pass", Cell::boolean(item.pass))
                               .add("detail", Cell::text(item.detail)));
    }
    if (tr.locus) {
        rep.rows.push_back(ReportRow{"locus", {}}
                               .add("field", Cell::text("F_" + std::to_string(tr.locus->characteristic)))
                               .add("sing_source", integer(tr.locus->source_sing.size(), B))
                               .add("preimage", integer(tr.locus->preimage.size(), B))
                               .add("equal", Cell::boolean(tr.locus->equal()))
                               .add("sing_source_points", Cell::text(join_points(tr.locus->source_sing)))
                               .add("preimage_points", Cell::text(join_points(tr.locus->preimage))));
    }
    if (!tr.pass()) {
        rep.escalate(ExitStatus::Mismatch);
        rep.notes.push_back("transversality checks failed");
    }
    // Only arcs centered in Sing(G_X') enter the comparison.
    ReesAlgebra gs = local_presentation(m.spec.source());
    std::vector<NamedArc> usable;
    for (const auto& a : arcs) {
        if (in_singular_locus(gs, a.arc.center())) {
            usable.push_back(a);
        } else {
            rep.notes.push_back(a.id + ": center " + a.arc.center().to_string() + " not in Sing(G_X'), skipped");
        }
    }
    CompareOptions co;
    co.oracle = o.oracle;
    co.max_steps = steps_for(sc, o);
    ComparisonReport cr = persistence_compare(m.spec, usable, co);
    for (const auto& row : cr.rows) {
        ReportRow r{"compare", {}};
        r.add("arc", Cell::text(row.arc_id));
        r.add("rho_source", rho_cell(row.source)).add("rho_target", rho_cell(row.target));
        r.add("r_source", Cell::from(row.source.r, F)).add("r_target", Cell::from(row.target.r, F));
        r.add("nu_source", Cell::from(row.source.nu_t, F)).add("nu_target", Cell::from(row.target.nu_t, F));
        if (row.source_oracle) r.add("oracle_source", oracle_cell(*row.source_oracle));
        if (row.target_oracle) r.add("oracle_target", oracle_cell(*row.target_oracle));
        r.add("verdict", Cell::text(to_string(row.verdict)));
        if (!row.note.empty()) r.add("note", Cell::text(row.note));
        rep.rows.push_back(std::move(r));
    }
    // A failed transversality check outranks the per-arc rows.
    Verdict shown = tr.pass() ? cr.verdict : Verdict::Mismatch;
    std::string witness = cr.witness ? cr.rows[*cr.witness].arc_id : "-";
    if (!tr.pass() && !cr.witness) witness = "transversality";
    rep.rows.push_back(ReportRow{"verdict", {}}
                           .add("verdict", Cell::text(to_string(shown)))
                           .add("witness", Cell::text(witness))
                           .add("scope", Cell::text("sampled over the listed arcs")));
    if (cr.verdict == Verdict::Mismatch) rep.escalate(ExitStatus::Mismatch);
    if (cr.verdict == Verdict::Inconclusive) rep.escalate(ExitStatus::Inconclusive);
}

// --- zariski ----------------------------------------------------------------

void cmd_zariski(Report& rep, const Scenario& sc, const RunOptions&) {
    if (sc.zariski.empty()) throw Error(ErrorKind::InvalidArgument, "'zariski' needs a 'zariski' section");
    for (const auto& item : sc.zariski) {
        const Polynomial& f = sc.polynomial(item.poly);
        std::vector<Scalar> fibers;
        if (item.fibers) {
            fibers = *item.fibers;
        } else {
            for (std::uint32_t a = 0; a < sc.field.characteristic(); ++a) fibers.push_back(Scalar::from_int(sc.field, a));
        }
        const std::string& y = sc.ring->variables()[item.y];
        for (const auto& a : fibers) {
            ZariskiReport z = zariski_fiber_check(f, item.x, item.y, a);
            std::string factors;
            for (const auto& fac : z.factors) {
                factors += "(" + dense_string(fac.coefficients, y) + ")";
                if (fac.exponent != 1) factors += "^" + std::to_string(fac.exponent);
            }
            ReportRow row{"fiber", {}};
            row.add("poly", Cell::text(item.poly)).add(sc.ring->variables()[item.x], Cell::text(a.to_string()));
            row.add("factors", Cell::text(factors)).add("sum", integer(z.sum, B)).add("degree", integer(z.degree, F));
            row.add("holds", Cell::boolean(z.holds()));
            rep.rows.push_back(std::move(row));
            if (!z.holds()) rep.escalate(ExitStatus::Mismatch);
        }
    }
}

// --- selftest ---------------------------------------------------------------

void cmd_selftest(Report& rep, const RunOptions& o) {
    SuiteOptions so;
    if (o.max_steps) so.max_steps = *o.max_steps;
    SuiteReport sr = run_flagship_suite(so);
    std::size_t i = 0;
    while (i < sr.cases.size()) {
        std::size_t j = i, passed = 0;
        std::set<std::string> arcs;
        while (j < sr.cases.size() && sr.cases[j].scenario == sr.cases[i].scenario) {
            arcs.insert(sr.cases[j].arc);
            if (sr.cases[j].pass) ++passed;
            ++j;
        }
        ReportRow row{"selftest", {}};
        row.add("scenario", Cell::text(sr.cases[i].scenario)).add("arcs", integer(arcs.size(), Provenance::None));
        row.add("cases", integer(j - i, Provenance::None)).add("passed", integer(passed, O));
        row.add("pass", Cell::boolean(passed == j - i));
        rep.rows.push_back(std::move(row));
        i = j;
    }
    for (const auto& c : sr.cases) {
        if (c.pass) continue;
        ReportRow row{"selftest-failure", {}};
        row.add("scenario", Cell::text(c.scenario)).add("arc", Cell::text(c.arc)).add("n", integer(c.n, Provenance::None));
        row.add("r", Cell::from(c.r, F)).add("rho", c.rho ? Cell::integer(*c.rho, F) : Cell::text("undefined"));
        row.add("oracle", Cell::text(to_string(c.oracle_kind) + " " + std::to_string(c.oracle)));
        rep.rows.push_back(std::move(row));
    }
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << sr.seconds;
    rep.notes.push_back("oracle = floor(ord_t(phi(G))) over " + std::to_string(sr.cases.size()) + " cases in " +
                        t.str() + " s");
    if (!sr.pass()) rep.escalate(ExitStatus::Mismatch);
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"order", "sing", "diff", "nash", "persist", "compare", "zariski", "selftest"};
    return names;
}

Report run_command(const std::string& command, const Scenario* scenario, const std::string& source,
                   const RunOptions& options) {
    Report rep;
    rep.command = command;
    rep.source = source;
    if (command == "selftest") {
        cmd_selftest(rep, options);
    } else if (command == "order") {
        cmd_order(rep, need(scenario, command), options);
    } else if (command == "sing") {
        cmd_sing(rep, need(scenario, command), options);
    } else if (command == "diff") {
        cmd_diff(rep, need(scenario, command), options);
    } else if (command == "nash") {
        cmd_nash(rep, need(scenario, command), options);
    } else if (command == "persist") {
        cmd_persist(rep, need(scenario, command), options);
    } else if (command == "compare") {
        cmd_compare(rep, need(scenario, command), options);
    } else if (command == "zariski") {
        cmd_zariski(rep, need(scenario, command), options);
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown command '" + command + "'");
    }
    return rep;
}

}  // namespace arcinv
