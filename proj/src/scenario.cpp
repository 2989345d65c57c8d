#include "arcinv/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "arcinv/error.hpp"

namespace arcinv {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw Error(ErrorKind::Validation, "at " + (path.empty() ? std::string("/") : path) + ": " + msg);
}

std::string child(const std::string& path, const std::string& key) {
    // JSON pointer escaping.
    std::string k;
    for (char c : key) {
        if (c == '~') {
            k += "~0";
        } else if (c == '/') {
            k += "~1";
        } else {
            k += c;
        }
    }
    return path + "/" + k;
}

std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

void expect_object(const Json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
}

void expect_array(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
}

void check_keys(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return it.key() == a; });
        if (!ok) fail(child(path, it.key()), "unknown key '" + it.key() + "'");
    }
}

std::string get_string(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

std::uint64_t get_unsigned(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        fail(path, "expected a nonnegative integer");
    }
    return j.get<std::uint64_t>();
}

Scalar get_scalar(const Field& field, const Json& j, const std::string& path) {
    try {
        if (j.is_number_integer()) return Scalar::from_int(field, j.get<long>());
        if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
    } catch (const Error& e) {
        fail(path, e.what());
    }
    fail(path, "expected an integer or a \"p/q\" string");
}

std::vector<std::string> get_string_list(const Json& j, const std::string& path) {
    expect_array(j, path);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_string(j[i], child(path, i)));
    return out;
}

Polynomial get_polynomial(const RingPtr& ring, const Json& j, const std::string& path) {
    std::string text = get_string(j, path);
    try {
        return parse_polynomial(ring, text);
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

RationalPoint get_point(const Ring& ring, const Json& j, const std::string& path) {
    expect_array(j, path);
    if (j.size() != ring.size()) {
        fail(path, "point has " + std::to_string(j.size()) + " coordinates, ambient space has " +
                       std::to_string(ring.size()));
    }
    std::vector<Scalar> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(get_scalar(ring.field(), j[i], child(path, i)));
    return RationalPoint(std::move(c));
}

ArcSpec get_arc(const RingPtr& ring, const std::string& name, const Json& j, const std::string& path) {
    expect_object(j, path);
    const auto& vars = ring->variables();
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "precision" && !ring->index_of(it.key())) {
            fail(child(path, it.key()), "unknown key '" + it.key() + "' (not an ambient variable)");
        }
    }
    ArcSpec arc;
    arc.name = name;
    if (j.contains("precision")) {
        std::uint64_t n = get_unsigned(j["precision"], child(path, "precision"));
        if (n == 0) fail(child(path, "precision"), "precision must be >= 1");
        arc.precision = n;
    }
    RingPtr tring = make_ring(ring->field(), {"t"});
    for (const auto& v : vars) {
        std::string p = child(path, v);
        if (!j.contains(v)) fail(path, "missing series for variable '" + v + "'");
        const Json& s = j[v];
        std::vector<Scalar> coeffs;
        if (s.is_array()) {
            for (std::size_t i = 0; i < s.size(); ++i) coeffs.push_back(get_scalar(ring->field(), s[i], child(p, i)));
        } else if (s.is_string()) {
            // A polynomial in t, expanded exactly.
            Polynomial f = get_polynomial(tring, s, p);
            std::size_t deg = f.is_zero() ? 0 : f.degree_in(0);
            coeffs.assign(deg + 1, Scalar::zero(ring->field()));
            for (const auto& [e, c] : f.terms()) coeffs[e[0]] = c;
        } else {
            fail(p, "expected a coefficient list or a polynomial in t");
        }
        if (coeffs.empty()) coeffs.push_back(Scalar::zero(ring->field()));
        arc.coefficients.push_back(std::move(coeffs));
    }
    return arc;
}

std::vector<LayerSpec> get_layers(const Json& j, const std::string& path) {
    expect_array(j, path);
    std::vector<LayerSpec> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string p = child(path, i);
        expect_object(j[i], p);
        check_keys(j[i], p, {"var", "poly"});
        if (!j[i].contains("var") || !j[i].contains("poly")) fail(p, "layer needs 'var' and 'poly'");
        out.push_back({get_string(j[i]["var"], child(p, "var")), get_string(j[i]["poly"], child(p, "poly"))});
    }
    return out;
}

// Keys inside one object must be distinct; nlohmann would keep the last one.
Json parse_strict(std::string_view text) {
    std::vector<std::set<std::string>> stack;
    std::string duplicate;
    auto cb = [&](int, Json::parse_event_t ev, Json& parsed) {
        if (ev == Json::parse_event_t::object_start) {
            stack.emplace_back();
        } else if (ev == Json::parse_event_t::object_end) {
            if (!stack.empty()) stack.pop_back();
        } else if (ev == Json::parse_event_t::key && !stack.empty()) {
            std::string k = parsed.get<std::string>();
            if (!stack.back().insert(k).second && duplicate.empty()) duplicate = k;
        }
        return true;
    };
    Json j;
    try {
        j = Json::parse(text.begin(), text.end(), cb);
    } catch (const Json::parse_error& e) {
        std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        auto at = msg.find("syntax error");
        throw ParseError(at == std::string::npos ? msg : msg.substr(at), line, col);
    }
    if (!duplicate.empty()) throw Error(ErrorKind::Validation, "duplicate key '" + duplicate + "'");
    return j;
}

}  // namespace

const Polynomial& Scenario::polynomial(const std::string& name) const {
    for (const auto& [n, p] : polynomials) {
        if (n == name) return p;
    }
    throw Error(ErrorKind::Validation, "no polynomial named '" + name + "'");
}

std::vector<Polynomial> Scenario::variety_polynomials() const {
    std::vector<Polynomial> out;
    for (const auto& n : variety) out.push_back(polynomial(n));
    if (hypersurface && std::find(variety.begin(), variety.end(), *hypersurface) == variety.end()) {
        out.push_back(polynomial(*hypersurface));
    }
    return out;
}

Scenario parse_scenario(std::string_view text, const ScenarioOptions& options) {
    Json root = parse_strict(text);
    expect_object(root, "");
    check_keys(root, "", {"char", "variables", "polynomials", "algebras", "arcs", "points", "variety", "hypersurface",
                          "morphism", "zariski", "defaults"});
    Scenario sc;
    std::uint32_t p = 0;
    if (root.contains("char")) p = static_cast<std::uint32_t>(get_unsigned(root["char"], "/char"));
    if (options.characteristic) p = *options.characteristic;
    try {
        sc.field = Field::with_characteristic(p);
    } catch (const Error& e) {
        fail("/char", e.what());
    }

    std::set<std::string> names;
    auto claim = [&](const std::string& name, const std::string& path) {
        if (!is_identifier(name)) fail(path, "'" + name + "' is not a valid name");
        if (!names.insert(name).second) fail(path, "name '" + name + "' is already used");
    };

    if (root.contains("variables")) {
        auto vars = get_string_list(root["variables"], "/variables");
        try {
            sc.ring = make_ring(sc.field, vars);
        } catch (const Error& e) {
            fail("/variables", e.what());
        }
        for (const auto& v : vars) names.insert(v);
    }
    auto need_ring = [&](const char* key) {
        if (!sc.ring) fail(std::string("/") + key, "section needs 'variables'");
    };

    if (root.contains("defaults")) {
        const Json& d = root["defaults"];
        expect_object(d, "/defaults");
        check_keys(d, "/defaults", {"precision", "max_steps"});
        if (d.contains("precision")) {
            sc.defaults.precision = get_unsigned(d["precision"], "/defaults/precision");
            if (sc.defaults.precision == 0) fail("/defaults/precision", "precision must be >= 1");
        }
        if (d.contains("max_steps")) sc.defaults.max_steps = get_unsigned(d["max_steps"], "/defaults/max_steps");
    }

    if (root.contains("polynomials")) {
        need_ring("polynomials");
        const Json& ps = root["polynomials"];
        expect_object(ps, "/polynomials");
        for (auto it = ps.begin(); it != ps.end(); ++it) {
            std::string path = child("/polynomials", it.key());
            claim(it.key(), path);
            sc.polynomials.emplace_back(it.key(), get_polynomial(sc.ring, it.value(), path));
        }
    }
    auto lookup_or_parse = [&](const Json& j, const std::string& path) {
        std::string s = get_string(j, path);
        for (const auto& [n, poly] : sc.polynomials) {
            if (n == s) return poly;
        }
        return get_polynomial(sc.ring, j, path);
    };
    auto require_poly_name = [&](const std::string& name, const std::string& path) {
        bool found = std::any_of(sc.polynomials.begin(), sc.polynomials.end(),
                                 [&](const auto& np) { return np.first == name; });
        if (!found) fail(path, "unresolved polynomial '" + name + "'");
    };

    if (root.contains("algebras")) {
        need_ring("algebras");
        const Json& as = root["algebras"];
        expect_object(as, "/algebras");
        for (auto it = as.begin(); it != as.end(); ++it) {
            std::string path = child("/algebras", it.key());
            claim(it.key(), path);
            expect_array(it.value(), path);
            ReesAlgebra g(sc.ring);
            for (std::size_t i = 0; i < it.value().size(); ++i) {
                std::string gp = child(path, i);
                const Json& gen = it.value()[i];
                expect_object(gen, gp);
                check_keys(gen, gp, {"poly", "weight"});
                if (!gen.contains("poly") || !gen.contains("weight")) fail(gp, "generator needs 'poly' and 'weight'");
                Polynomial f = lookup_or_parse(gen["poly"], child(gp, "poly"));
                auto w = get_unsigned(gen["weight"], child(gp, "weight"));
                try {
                    g.add({std::move(f), static_cast<std::uint32_t>(w)});
                } catch (const Error& e) {
                    fail(gp, e.what());
                }
            }
            sc.algebras.emplace_back(it.key(), std::move(g));
        }
    }

    if (root.contains("arcs")) {
        need_ring("arcs");
        const Json& as = root["arcs"];
        expect_object(as, "/arcs");
        for (auto it = as.begin(); it != as.end(); ++it) {
            std::string path = child("/arcs", it.key());
            claim(it.key(), path);
            sc.arcs.push_back(get_arc(sc.ring, it.key(), it.value(), path));
        }
    }

    if (root.contains("points")) {
        need_ring("points");
        const Json& ps = root["points"];
        expect_object(ps, "/points");
        for (auto it = ps.begin(); it != ps.end(); ++it) {
            std::string path = child("/points", it.key());
            claim(it.key(), path);
            sc.points.push_back({it.key(), get_point(*sc.ring, it.value(), path)});
        }
    }

    if (root.contains("variety")) {
        sc.variety = get_string_list(root["variety"], "/variety");
        for (std::size_t i = 0; i < sc.variety.size(); ++i) require_poly_name(sc.variety[i], child("/variety", i));
    }
    if (root.contains("hypersurface")) {
        sc.hypersurface = get_string(root["hypersurface"], "/hypersurface");
        require_poly_name(*sc.hypersurface, "/hypersurface");
    }

    if (root.contains("zariski")) {
        need_ring("zariski");
        const Json& zs = root["zariski"];
        expect_array(zs, "/zariski");
        for (std::size_t i = 0; i < zs.size(); ++i) {
            std::string path = child("/zariski", i);
            const Json& z = zs[i];
            expect_object(z, path);
            check_keys(z, path, {"poly", "x", "y", "fibers"});
            if (!z.contains("poly")) fail(path, "missing 'poly'");
            ZariskiItem item;
            item.poly = get_string(z["poly"], child(path, "poly"));
            require_poly_name(item.poly, child(path, "poly"));
            auto var = [&](const char* key, std::size_t fallback) {
                if (!z.contains(key)) {
                    if (fallback >= sc.ring->size()) fail(path, std::string("missing '") + key + "'");
                    return fallback;
                }
                std::string name = get_string(z[key], child(path, key));
                auto idx = sc.ring->index_of(name);
                if (!idx) fail(child(path, key), "unknown variable '" + name + "'");
                return *idx;
            };
            item.x = var("x", 0);
            item.y = var("y", 1);
            if (z.contains("fibers")) {
                const Json& f = z["fibers"];
                std::string fp = child(path, "fibers");
                if (f.is_string() && f.get<std::string>() == "all") {
                    if (!sc.field.is_prime_field()) fail(fp, "\"all\" fibers needs a finite field");
                } else {
                    expect_array(f, fp);
                    std::vector<Scalar> vals;
                    for (std::size_t k = 0; k < f.size(); ++k) vals.push_back(get_scalar(sc.field, f[k], child(fp, k)));
                    item.fibers = std::move(vals);
                }
            } else if (!sc.field.is_prime_field()) {
                fail(path, "fibers must be listed over Q");
            }
            sc.zariski.push_back(std::move(item));
        }
    }

    if (root.contains("morphism")) {
        const Json& m = root["morphism"];
        const std::string mp = "/morphism";
        expect_object(m, mp);
        check_keys(m, mp, {"base_vars", "tower", "extra_tower", "target_relations", "extra_relations",
                           "declared_rank", "points", "arcs"});
        if (!m.contains("base_vars") || !m.contains("tower")) fail(mp, "needs 'base_vars' and 'tower'");
        auto base = get_string_list(m["base_vars"], mp + "/base_vars");
        auto tower = get_layers(m["tower"], mp + "/tower");
        std::vector<LayerSpec> extra;
        if (m.contains("extra_tower")) extra = get_layers(m["extra_tower"], mp + "/extra_tower");
        std::vector<std::string> target_rel, source_rel;
        if (m.contains("target_relations")) target_rel = get_string_list(m["target_relations"], mp + "/target_relations");
        if (m.contains("extra_relations")) source_rel = get_string_list(m["extra_relations"], mp + "/extra_relations");
        std::vector<LayerSpec> full = tower;
        full.insert(full.end(), extra.begin(), extra.end());
        // Relations of X hold on X' too.
        std::vector<std::string> all_rel = target_rel;
        all_rel.insert(all_rel.end(), source_rel.begin(), source_rel.end());
        std::optional<FiniteMorphismSpec> spec;
        try {
            TriangularPresentation target(sc.field, base, tower, target_rel);
            TriangularPresentation source(sc.field, base, full, all_rel);
            std::uint64_t rank = 1;
            for (const auto& l : source.tower()) rank *= l.degree;
            for (const auto& l : target.tower()) rank /= l.degree;
            if (m.contains("declared_rank")) rank = get_unsigned(m["declared_rank"], mp + "/declared_rank");
            spec.emplace(std::move(target), std::move(source), rank);
        } catch (const Error& e) {
            if (std::string(e.what()).rfind("at /", 0) == 0) throw;
            fail(mp, e.what());
        }
        MorphismScenario ms{std::move(*spec), {}, {}};
        const RingPtr& sring = ms.spec.source().ring_ptr();
        if (m.contains("points")) {
            const Json& ps = m["points"];
            expect_object(ps, mp + "/points");
            for (auto it = ps.begin(); it != ps.end(); ++it) {
                std::string path = child(mp + "/points", it.key());
                claim(it.key(), path);
                ms.points.push_back({it.key(), get_point(*sring, it.value(), path)});
            }
        }
        if (m.contains("arcs")) {
            const Json& as = m["arcs"];
            expect_object(as, mp + "/arcs");
            for (auto it = as.begin(); it != as.end(); ++it) {
                std::string path = child(mp + "/arcs", it.key());
                claim(it.key(), path);
                ms.arcs.push_back(get_arc(sring, it.key(), it.value(), path));
            }
        }
        sc.morphism = std::move(ms);
    }
    return sc;
}

Scenario load_scenario(const std::string& path, const ScenarioOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read scenario file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str(), options);
}

std::size_t arc_precision(const ArcSpec& arc, const ScenarioDefaults& defaults,
                          std::optional<std::size_t> override_precision) {
    if (override_precision) return *override_precision;
    if (arc.precision) return *arc.precision;
    return defaults.precision;
}

Arc materialize(const ArcSpec& arc, const RingPtr& ring, std::size_t precision) {
    if (precision == 0) throw Error(ErrorKind::InvalidArgument, "arc precision must be >= 1");
    std::vector<TruncatedSeries> series;
    for (const auto& c : arc.coefficients) {
        std::vector<Scalar> k(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(c.size(), precision)));
        series.emplace_back(ring->field(), std::move(k), precision);
    }
    return Arc(ring, std::move(series));
}

}  // namespace arcinv
