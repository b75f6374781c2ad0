#include "girylab/finmeas.hpp"

#include <sstream>

namespace girylab {

bool is_measurable(const FinMeasSpace& dom, const FinMeasSpace& cod,
                   const std::map<Point, Point>& graph) {
    if (graph.size() != dom.points().size()) return false;
    for (const auto& [p, q] : graph) {
        if (!dom.has_point(p) || !cod.has_point(q)) return false;
    }
    // Preimage of each codomain atom must be a union of domain atoms,
    // i.e. the image of a domain atom meets exactly one codomain atom.
    for (const auto& atom : dom.atoms()) {
        std::size_t first = cod.atom_of(graph.at(atom.front()));
        for (const auto& p : atom)
            if (cod.atom_of(graph.at(p)) != first) return false;
    }
    return true;
}

MeasurableMap make_measurable_map(FinMeasSpace dom, FinMeasSpace cod,
                                  std::map<Point, Point> graph) {
    if (!is_measurable(dom, cod, graph))
        throw input_error("graph is not a measurable map");
    MeasurableMap f;
    f.dom = std::move(dom);
    f.cod = std::move(cod);
    f.graph = std::move(graph);
    return f;
}

FinMeasSpace generate_sigma(const std::vector<Point>& points,
                            const std::vector<PointSet>& generators) {
    PointSet carrier(points.begin(), points.end());
    for (const auto& g : generators)
        for (const auto& p : g)
            if (!carrier.count(p))
                throw input_error("generator contains unknown point '" + p + "'");

    // Two points share an atom iff no generator splits them. The coarsest
    // partition refining every generator/complement split is read off from
    // the membership signature of each point.
    std::map<std::vector<bool>, std::vector<Point>> blocks;
    for (const auto& p : points) {
        std::vector<bool> sig;
        sig.reserve(generators.size());
        for (const auto& g : generators) sig.push_back(g.count(p) > 0);
        blocks[sig].push_back(p);
    }
    std::vector<std::vector<Point>> atoms;
    for (auto& [sig, blk] : blocks) atoms.push_back(std::move(blk));
    return FinMeasSpace::from_atoms(points, std::move(atoms));
}

Separation separate(const FinMeasSpace& x) {
    std::vector<Point> qpoints;
    for (std::size_t i = 0; i < x.atom_count(); ++i) qpoints.push_back(x.atom_key(i));

    // Final sigma-algebra on the quotient: W measurable iff q^{-1}(W) is.
    // Every q^{-1}(singleton) is an atom of X, so the quotient is discrete;
    // assert rather than assume.
    FinMeasSpace xs = FinMeasSpace::discrete(qpoints);
    for (const auto& key : qpoints) {
        auto idx = x.atom_index_by_key(key);
        if (!idx) throw consistency_error("separate: lost atom key");
        PointSet pre(x.atoms()[*idx].begin(), x.atoms()[*idx].end());
        if (!x.is_atom_union(pre))
            throw consistency_error("separate: q-preimage of a block is not measurable");
    }

    std::map<Point, Point> graph;
    for (const auto& p : x.points()) graph[p] = x.atom_key(x.atom_of(p));
    return {xs, make_measurable_map(x, xs, std::move(graph))};
}

MeasurableMap induced_map(const MeasurableMap& f) {
    Separation sx = separate(f.dom);
    Separation sy = separate(f.cod);
    std::map<Point, Point> graph;
    for (const auto& atom : f.dom.atoms()) {
        const Point& target = sy.q(f(atom.front()));
        for (const auto& p : atom)
            if (sy.q(f(p)) != target)
                throw consistency_error("induced_map: one atom maps into two cod atoms");
        graph[sx.q(atom.front())] = target;
    }
    return make_measurable_map(sx.quotient, sy.quotient, std::move(graph));
}

std::vector<MeasurableMap> enumerate_measurable_maps(const FinMeasSpace& x,
                                                     const FinMeasSpace& y,
                                                     std::size_t cap) {
    const auto& xp = x.points();
    const std::size_t ny = y.points().size();
    double candidates = 1;
    for (std::size_t i = 0; i < xp.size(); ++i) candidates *= double(ny);
    if (candidates > double(cap))
        throw resource_error("enumeration cap exceeded");

    std::vector<MeasurableMap> out;
    std::vector<std::size_t> choice(xp.size(), 0);
    bool done = xp.empty() && ny == 0;
    if (ny == 0) {
        if (xp.empty()) {
            MeasurableMap f;
            f.dom = x;
            f.cod = y;
            out.push_back(f);
        }
        return out;
    }
    while (true) {
        std::map<Point, Point> graph;
        for (std::size_t i = 0; i < xp.size(); ++i) graph[xp[i]] = y.points()[choice[i]];
        if (is_measurable(x, y, graph)) {
            MeasurableMap f;
            f.dom = x;
            f.cod = y;
            f.graph = std::move(graph);
            out.push_back(std::move(f));
        }
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < ny) break;
            choice[i] = 0;
        }
        if (i == choice.size()) break;
        (void)done;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string map_key(const MeasurableMap& f) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [p, q] : f.graph) {
        if (!first) os << ",";
        first = false;
        os << p << ":" << q;
    }
    os << "]";
    return os.str();
}

FunctionSpace hom_and_function_space(const FinMeasSpace& x, const FinMeasSpace& y,
                                     std::size_t cap) {
    auto maps = enumerate_measurable_maps(x, y, cap);
    std::vector<Point> points;
    for (const auto& f : maps) points.push_back(map_key(f));

    // ev_p^{-1}(V) for V an atom-union of Y is a union of ev_p^{-1}(atom),
    // so the single-atom preimages generate the evaluation sigma-algebra.
    std::vector<PointSet> generators;
    for (const auto& p : x.points()) {
        for (std::size_t a = 0; a < y.atom_count(); ++a) {
            PointSet g;
            for (const auto& f : maps)
                if (y.atom_of(f(p)) == a) g.insert(map_key(f));
            generators.push_back(std::move(g));
        }
    }
    return {maps, generate_sigma(points, generators)};
}

SuiteReport check_S_adjunction(const FinMeasSpace& x, const FinMeasSpace& y,
                               std::size_t cap) {
    SuiteReport rep;
    rep.suite = "S-adjunction";
    if (!y.separated()) {
        rep.add("precondition: Y separated", false, "Y is not separated");
        return rep;
    }
    Separation s = separate(x);

    auto homXY = enumerate_measurable_maps(x, y, cap);
    auto homXsY = enumerate_measurable_maps(s.quotient, y, cap);

    rep.add("hom-set sizes equal", homXY.size() == homXsY.size(),
            "sizes " + std::to_string(homXsY.size()) + " vs " + std::to_string(homXY.size()));

    // g |-> g . q_X is injective and lands in Hom(X, Y); equal sizes then
    // give bijectivity.
    std::set<std::map<Point, Point>> images;
    bool injective = true, surjective_ok = true;
    std::string wit;
    for (const auto& g : homXsY) {
        MeasurableMap composite = compose(g, s.q);
        if (!images.insert(composite.graph).second) {
            injective = false;
            wit = map_key(g);
        }
        bool found = false;
        for (const auto& f : homXY)
            if (f.graph == composite.graph) found = true;
        if (!found) {
            surjective_ok = false;
            wit = map_key(g);
        }
    }
    rep.add("composition with q is injective", injective, wit);
    rep.add("composition with q lands in Hom(X,Y)", surjective_ok, wit);
    rep.add("bijection", injective && surjective_ok && homXY.size() == homXsY.size(), wit);

    // Idempotence of the induced monad: separating the quotient is trivial.
    Separation s2 = separate(s.quotient);
    rep.add("monad idempotent", s2.quotient == s.quotient, "separate(X_s) != X_s");
    return rep;
}

} // namespace girylab
