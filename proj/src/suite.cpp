#include "arcinv/suite.hpp"

#include <chrono>

#include "arcinv/error.hpp"

namespace arcinv {

namespace {

std::string cusp(unsigned p) {
    return R"J({
  "char": )J" + std::to_string(p) + R"J(,
  "variables": ["x", "y"],
  "polynomials": {"f": "x^2 - y^3"},
  "algebras": {"G": [{"poly": "f", "weight": 2}]},
  "variety": ["f"],
  "arcs": {
    "a1": {"x": [0, 0, 0, 1], "y": [0, 0, 1]},
    "a2": {"x": "(t+t^2)^3", "y": "(t+t^2)^2"},
    "a3": {"x": "(2*t-t^3)^3", "y": "(2*t-t^3)^2"}
  },
  "defaults": {"precision": 32, "max_steps": 512}
}
)J";
}

std::string a_k(unsigned k) {
    std::string e = std::to_string(k + 1);
    std::string arcs = R"J(
    "a1": {"x": "t^)J" + e + R"J(", "y": "t^2"},
    "a2": {"x": "(t+t^2)^)J" + e + R"J(", "y": "(t+t^2)^2"},
    "a3": {"x": "(2*t-t^3)^)J" + e + R"J(", "y": "(2*t-t^3)^2"})J";
    if (k % 2 == 1) {
        std::string h = std::to_string((k + 1) / 2);
        arcs += R"J(,
    "b1": {"x": "t^)J" + h + R"J(", "y": "t"},
    "b2": {"x": "-(t+t^2)^)J" + h + R"J(", "y": "t+t^2"})J";
    }
    return R"J({
  "char": 0,
  "variables": ["x", "y"],
  "polynomials": {"f": "x^2 - y^)J" + e + R"J("},
  "algebras": {"G": [{"poly": "f", "weight": 2}]},
  "variety": ["f"],
  "arcs": {)J" + arcs + R"J(
  },
  "defaults": {"precision": 32, "max_steps": 512}
}
)J";
}

const char* umbrella = R"J({
  "char": 0,
  "variables": ["x", "y", "z"],
  "polynomials": {"f": "x^2 - z*y^2"},
  "algebras": {"G": [{"poly": "f", "weight": 2}]},
  "variety": ["f"],
  "arcs": {
    "o1": {"x": "t^3", "y": "t^2", "z": "t^2"},
    "o2": {"x": "t^3", "y": "t", "z": "t^4"},
    "o3": {"x": "(t+t^2)*(t^2+t^3)", "y": "t^2+t^3", "z": "(t+t^2)^2"},
    "c1": {"x": "(1+t)*t", "y": "t", "z": "(1+t)^2"}
  },
  "defaults": {"precision": 32, "max_steps": 512}
}
)J";

// S = k[s]; x^2 = s^3, z^3 = s^4.
const char* tower_a = R"J({
  "char": 0,
  "variables": ["s", "x", "z"],
  "polynomials": {"f1": "x^2 - s^3", "f2": "z^3 - s^4"},
  "algebras": {"G": [{"poly": "f1", "weight": 2}, {"poly": "f2", "weight": 3}]},
  "variety": ["f1", "f2"],
  "arcs": {
    "w1": {"s": "t^6", "x": "t^9", "z": "t^8"},
    "w2": {"s": "(t+t^2)^6", "x": "(t+t^2)^9", "z": "(t+t^2)^8"},
    "w3": {"s": "(2*t-t^3)^6", "x": "(2*t-t^3)^9", "z": "(2*t-t^3)^8"}
  },
  "defaults": {"precision": 32, "max_steps": 512}
}
)J";

// S = k[s,u]; x^2 = s^2 u, z^2 = u^3.
const char* tower_b = R"J({
  "char": 0,
  "variables": ["s", "u", "x", "z"],
  "polynomials": {"f1": "x^2 - s^2*u", "f2": "z^2 - u^3"},
  "algebras": {"G": [{"poly": "f1", "weight": 2}, {"poly": "f2", "weight": 2}]},
  "variety": ["f1", "f2"],
  "arcs": {
    "b1": {"s": "t^2", "u": "t^2", "x": "t^3", "z": "t^3"},
    "b2": {"s": "t", "u": "(t+t^2)^2", "x": "t*(t+t^2)", "z": "(t+t^2)^3"},
    "b3": {"s": "t^3", "u": "t^4", "x": "t^5", "z": "t^6"},
    "b4": {"s": "t+t^3", "u": "4*t^2", "x": "2*t*(t+t^3)", "z": "8*t^3"}
  },
  "defaults": {"precision": 32, "max_steps": 512}
}
)J";

}  // namespace

const std::vector<CuratedScenario>& curated_scenarios() {
    static const std::vector<CuratedScenario> all = [] {
        std::vector<CuratedScenario> v;
        v.push_back({"cusp-char0", cusp(0)});
        v.push_back({"cusp-char2", cusp(2)});
        v.push_back({"cusp-char3", cusp(3)});
        for (unsigned k = 1; k <= 5; ++k) v.push_back({"A" + std::to_string(k), a_k(k)});
        v.push_back({"whitney-umbrella", umbrella});
        v.push_back({"tower-a", tower_a});
        v.push_back({"tower-b", tower_b});
        return v;
    }();
    return all;
}

bool SuiteReport::pass() const {
    if (cases.empty()) return false;
    for (const auto& c : cases) {
        if (!c.pass) return false;
    }
    return true;
}

SuiteReport run_flagship_suite(const SuiteOptions& options) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    for (const auto& cs : curated_scenarios()) {
        Scenario sc = parse_scenario(cs.text);
        const ReesAlgebra g = diff_saturate(sc.algebras.front().second);
        auto defining = sc.variety_polynomials();
        for (const auto& spec : sc.arcs) {
            Arc base = materialize(spec, sc.ring, arc_precision(spec, sc.defaults));
            if (!validate_on_variety(base, defining)) {
                throw Error(ErrorKind::Validation, cs.name + ": arc " + spec.name + " is not on the variety");
            }
            ArcOrder r1 = ord_rees_along_arc(base, g);
            for (std::size_t n : options.reparametrizations) {
                SuiteCase c;
                c.scenario = cs.name;
                c.arc = spec.name;
                c.n = n;
                Arc phi = reparametrize(base, n);
                PersistenceReport pr = persistence_invariants(phi, g, phi.center());
                c.r = pr.r;
                c.rho = pr.rho;
                c.homogeneous = r1.is_finite() && pr.r.is_finite() &&
                                pr.r.value() == mpq_class(r1.value() * mpq_class(static_cast<unsigned long>(n)));
                OracleResult o = persistence_oracle(phi, g, phi.center(), options.max_steps);
                c.oracle_kind = o.kind;
                c.oracle = o.steps;
                c.pass = !pr.inconclusive && o.dropped() && c.homogeneous &&
                         mpz_class(static_cast<unsigned long>(o.steps)) == *pr.rho;
                rep.cases.push_back(std::move(c));
            }
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace arcinv
