#include "girylab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace girylab {

namespace {

using nlohmann::json;

Rat parse_rat(const json& j, const std::string& where) {
    if (!j.is_string()) throw input_error(where + ": rational must be a \"p/q\" string");
    try {
        return Rat::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw input_error(where + ": " + e.what());
    }
}

const FinMeasSpace& resolve_space(const std::map<std::string, FinMeasSpace>& spaces,
                                  const std::string& name, const std::string& where) {
    auto it = spaces.find(name);
    if (it == spaces.end()) throw input_error(where + ": unknown space '" + name + "'");
    return it->second;
}

Prob parse_weights(const json& w, const FinMeasSpace& sp, const std::string& where) {
    if (!w.is_object()) throw input_error(where + ": weights must be an object");
    std::vector<Rat> weights(sp.atom_count(), Rat(0));
    for (const auto& [key, val] : w.items()) {
        auto idx = sp.atom_index_by_key(key);
        if (!idx) throw input_error(where + ": '" + key + "' is not an atom key");
        weights[*idx] = parse_rat(val, where + " weight '" + key + "'");
    }
    try {
        return Prob::make(sp, std::move(weights));
    } catch (const input_error& e) {
        throw input_error(where + ": " + e.what());
    }
}

} // namespace

FinMeasSpace parse_space(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("atoms"))
        throw input_error("space: expected {\"points\":[...],\"atoms\":[[...],...]}");
    std::vector<Point> points = j.at("points").get<std::vector<Point>>();
    auto atoms = j.at("atoms").get<std::vector<std::vector<Point>>>();
    return FinMeasSpace::from_atoms(std::move(points), std::move(atoms));
}

Prob parse_measure(const json& j, const std::map<std::string, FinMeasSpace>& spaces) {
    if (!j.is_object() || !j.contains("space") || !j.contains("weights"))
        throw input_error("measure: expected {\"space\":name,\"weights\":{...}}");
    const FinMeasSpace& sp = resolve_space(spaces, j.at("space").get<std::string>(), "measure");
    return parse_weights(j.at("weights"), sp, "measure");
}

Kernel parse_kernel(const json& j, const std::map<std::string, FinMeasSpace>& spaces) {
    if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("rows"))
        throw input_error("kernel: expected {\"dom\":...,\"cod\":...,\"rows\":{...}}");
    const FinMeasSpace& dom = resolve_space(spaces, j.at("dom").get<std::string>(), "kernel");
    const FinMeasSpace& cod = resolve_space(spaces, j.at("cod").get<std::string>(), "kernel");
    std::vector<Prob> rows(dom.atom_count(), Prob::dirac(cod, cod.atom_key(0)));
    std::vector<bool> seen(dom.atom_count(), false);
    for (const auto& [key, val] : j.at("rows").items()) {
        auto idx = dom.atom_index_by_key(key);
        if (!idx) throw input_error("kernel row '" + key + "': not an atom key of dom");
        const json& w = val.contains("weights") ? val.at("weights") : val;
        rows[*idx] = parse_weights(w, cod, "kernel row '" + key + "'");
        seen[*idx] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw input_error("kernel: missing row for atom '" + dom.atom_key(i) + "'");
    return Kernel::make(dom, cod, std::move(rows));
}

ConvexSpace parse_convex(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw input_error("convex space: missing kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "simplex") return ConvexSpace::simplex(j.at("n").get<int>());
    if (kind == "intervalQ") return ConvexSpace::intervalQ();
    if (kind == "rinfty") return ConvexSpace::rinfty();
    if (kind == "polytope") {
        std::vector<std::vector<Rat>> gens;
        for (const auto& g : j.at("generators")) {
            std::vector<Rat> row;
            for (const auto& c : g) row.push_back(parse_rat(c, "polytope generator"));
            gens.push_back(std::move(row));
        }
        return ConvexSpace::polytope(j.at("dim").get<int>(), std::move(gens));
    }
    if (kind == "semilattice") {
        auto elems = j.at("elements").get<std::vector<std::string>>();
        std::map<std::pair<std::string, std::string>, std::string> meet;
        // Meet table keys are "a|b" pairs; both orders are filled in.
        for (const auto& [key, val] : j.at("meet").items()) {
            auto bar = key.find('|');
            if (bar == std::string::npos)
                throw input_error("semilattice meet key '" + key + "': expected \"a|b\"");
            std::string a = key.substr(0, bar), b = key.substr(bar + 1);
            std::string c = val.get<std::string>();
            meet[{a, b}] = c;
            meet[{b, a}] = c;
        }
        for (const auto& e : elems) meet[{e, e}] = e;
        return ConvexSpace::semilattice(std::move(elems), std::move(meet));
    }
    throw input_error("convex space: unsupported kind '" + kind + "'");
}

Elem parse_elem(const ConvexSpace& a, const json& j) {
    if (a.as<Simplex>() || a.as<Polytope>()) {
        std::vector<Rat> v;
        for (const auto& c : j) v.push_back(parse_rat(c, "element coordinate"));
        return Elem{std::move(v)};
    }
    if (a.as<IntervalQ>()) return Elem{parse_rat(j, "element")};
    if (a.as<RInftySp>()) {
        std::string s = j.get<std::string>();
        if (s == "inf") return Elem{ExtRat::infinity()};
        return Elem{ExtRat::finite(Rat::parse(s))};
    }
    return Elem{j.get<std::string>()};
}

ModelFile parse_model(const json& j) {
    if (!j.is_object()) throw input_error("model file: top level must be an object");
    ModelFile m;
    if (j.contains("spaces"))
        for (const auto& [name, val] : j.at("spaces").items()) {
            try {
                m.spaces[name] = parse_space(val);
            } catch (const input_error& e) {
                throw input_error("space '" + name + "': " + e.what());
            }
        }
    if (j.contains("measures"))
        for (const auto& [name, val] : j.at("measures").items()) {
            try {
                m.measures.emplace(name, parse_measure(val, m.spaces));
            } catch (const input_error& e) {
                throw input_error("measure '" + name + "': " + e.what());
            }
        }
    if (j.contains("kernels"))
        for (const auto& [name, val] : j.at("kernels").items()) {
            try {
                m.kernels.emplace(name, parse_kernel(val, m.spaces));
            } catch (const input_error& e) {
                throw input_error("kernel '" + name + "': " + e.what());
            }
        }
    if (j.contains("maps"))
        for (const auto& [name, val] : j.at("maps").items()) {
            const FinMeasSpace& dom =
                resolve_space(m.spaces, val.at("dom").get<std::string>(), "map '" + name + "'");
            const FinMeasSpace& cod =
                resolve_space(m.spaces, val.at("cod").get<std::string>(), "map '" + name + "'");
            auto graph = val.at("graph").get<std::map<Point, Point>>();
            try {
                m.maps.emplace(name, make_measurable_map(dom, cod, std::move(graph)));
            } catch (const input_error& e) {
                throw input_error("map '" + name + "': " + e.what());
            }
        }
    if (j.contains("convex"))
        for (const auto& [name, val] : j.at("convex").items()) {
            try {
                m.convex[name] = parse_convex(val);
            } catch (const input_error& e) {
                throw input_error("convex '" + name + "': " + e.what());
            }
        }
    if (j.contains("cmeasures"))
        for (const auto& [name, val] : j.at("cmeasures").items()) {
            auto it = m.convex.find(val.at("space").get<std::string>());
            if (it == m.convex.end())
                throw input_error("cmeasure '" + name + "': unknown convex space");
            std::vector<std::pair<Rat, Elem>> supp;
            for (const auto& entry : val.at("support"))
                supp.emplace_back(parse_rat(entry.at(0), "cmeasure weight"),
                                  parse_elem(it->second, entry.at(1)));
            try {
                m.cmeasures.emplace(name, ConvexMeasure::make(it->second, std::move(supp)));
            } catch (const input_error& e) {
                throw input_error("cmeasure '" + name + "': " + e.what());
            }
        }
    if (j.contains("algebras"))
        for (const auto& [name, val] : j.at("algebras").items()) {
            AlgebraTable t;
            t.space_name = val.at("space").get<std::string>();
            resolve_space(m.spaces, t.space_name, "algebra '" + name + "'");
            if (val.contains("h")) t.h = val.at("h").get<std::map<std::string, Point>>();
            m.algebras[name] = std::move(t);
        }
    return m;
}

ModelFile load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error("'" + path + "': " + e.what());
    }
    return parse_model(j);
}

json space_json(const FinMeasSpace& x) {
    return json{{"points", x.points()}, {"atoms", x.atoms()}};
}

json measure_json(const Prob& p, const std::string& space_name) {
    json w = json::object();
    for (std::size_t i = 0; i < p.space.atom_count(); ++i)
        if (!p.weights[i].is_zero()) w[p.space.atom_key(i)] = p.weights[i].wire();
    return json{{"space", space_name}, {"weights", w}};
}

json kernel_json(const Kernel& k, const std::string& dom_name, const std::string& cod_name) {
    json rows = json::object();
    for (std::size_t i = 0; i < k.dom.atom_count(); ++i)
        rows[k.dom.atom_key(i)] = measure_json(k.rows[i], cod_name);
    return json{{"dom", dom_name}, {"cod", cod_name}, {"rows", rows}};
}

json elem_json(const Elem& e) {
    if (const auto* v = std::get_if<std::vector<Rat>>(&e)) {
        json a = json::array();
        for (const auto& c : *v) a.push_back(c.wire());
        return a;
    }
    if (const auto* r = std::get_if<Rat>(&e)) return r->wire();
    if (const auto* x = std::get_if<ExtRat>(&e)) return x->inf ? "inf" : x->value.wire();
    return std::get<std::string>(e);
}

std::string prob_key(const Prob& p) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.space.atom_count(); ++i)
        if (!p.weights[i].is_zero()) {
            if (!first) os << ";";
            os << p.space.atom_key(i) << "=" << p.weights[i].wire();
            first = false;
        }
    return os.str();
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace girylab
