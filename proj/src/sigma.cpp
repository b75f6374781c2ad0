#include "girylab/sigma.hpp"

#include <algorithm>

namespace girylab {

bool BooleanPair::contains(const Elem& e) const {
    switch (kind) {
    case Kind::FiniteSet: return part_keys.count(elem_str(e)) > 0;
    case Kind::Empty: return false;
    case Kind::Full: return true;
    case Kind::ZeroPoint: return e == Elem(Rat(0));
    case Kind::OnePoint: return e == Elem(Rat(1));
    case Kind::FinitePart: return !std::get<ExtRat>(e).inf;
    }
    return false;
}

AffineMap BooleanPair::chi() const {
    ConvexSpace two = ConvexSpace::two();
    switch (kind) {
    case Kind::FiniteSet: {
        std::map<Elem, Elem> g;
        for (const auto& e : space.carrier())
            g[e] = std::string(contains(e) ? "1" : "0");
        return AffineMap::table(space, two, std::move(g));
    }
    case Kind::Empty: return AffineMap::constant(space, two, std::string("0"));
    case Kind::Full: return AffineMap::constant(space, two, std::string("1"));
    case Kind::OnePoint:
        // chi_{1} on I is epsilon_2 itself.
        return AffineMap::path(two, std::string("0"), std::string("1"));
    case Kind::ZeroPoint:
        // gamma_{1,0}: 1 at r=0, 0 on (0,1].
        return AffineMap::path(two, std::string("1"), std::string("0"));
    case Kind::FinitePart:
        throw input_error("chi: no affine-map body for the RInfty finite part");
    }
    throw input_error("chi: bad kind");
}

std::string BooleanPair::desc() const {
    switch (kind) {
    case Kind::FiniteSet: {
        std::string s = "{";
        bool first = true;
        for (const auto& k : part_keys) {
            if (!first) s += ",";
            first = false;
            s += k;
        }
        return s + "}";
    }
    case Kind::Empty: return "{}";
    case Kind::Full: return "full";
    case Kind::ZeroPoint: return "{0}";
    case Kind::OnePoint: return "{1}";
    case Kind::FinitePart: return "complement-of {inf}";
    }
    return "?";
}

std::vector<BooleanPair> boolean_pairs(const ConvexSpace& a, std::size_t cap) {
    if (a.finite_carrier()) {
        std::vector<BooleanPair> out;
        std::set<std::set<std::string>> seen;
        for (const auto& m : hom_enum(a, ConvexSpace::two(), cap)) {
            std::set<std::string> part;
            for (const auto& e : a.carrier())
                if (m(e) == Elem(std::string("1"))) part.insert(elem_str(e));
            if (seen.insert(part).second) out.push_back(BooleanPair::finite(a, std::move(part)));
        }
        std::sort(out.begin(), out.end(), [](const BooleanPair& x, const BooleanPair& y) {
            return x.part_keys < y.part_keys;
        });
        return out;
    }
    if (a.as<IntervalQ>()) {
        return {BooleanPair::symbolic(a, BooleanPair::Kind::Empty),
                BooleanPair::symbolic(a, BooleanPair::Kind::ZeroPoint),
                BooleanPair::symbolic(a, BooleanPair::Kind::OnePoint),
                BooleanPair::symbolic(a, BooleanPair::Kind::Full)};
    }
    if (a.as<RInftySp>()) {
        // {inf} itself fails affinity as a part; it appears only as the
        // complement of the finite part.
        return {BooleanPair::symbolic(a, BooleanPair::Kind::Empty),
                BooleanPair::symbolic(a, BooleanPair::Kind::FinitePart),
                BooleanPair::symbolic(a, BooleanPair::Kind::Full)};
    }
    throw input_error("boolean_pairs: unsupported space kind " + a.kind());
}

std::string variant_name(SigmaVariant v) {
    switch (v) {
    case SigmaVariant::Sigma2: return "sigma2";
    case SigmaVariant::SigmaI: return "sigmaI";
    case SigmaVariant::Join: return "join";
    }
    return "?";
}

SigmaDescriptor sigma_functor(const ConvexSpace& a, SigmaVariant variant) {
    SigmaDescriptor d;
    d.source = a;
    d.variant = variant;

    if (a.finite_carrier()) {
        std::vector<Point> points;
        for (const auto& e : a.carrier()) points.push_back(elem_str(e));
        std::vector<PointSet> gens;
        if (variant != SigmaVariant::SigmaI) {
            for (const auto& bp : boolean_pairs(a)) {
                d.boolean_gens.push_back(bp);
                gens.push_back(PointSet(bp.part_keys.begin(), bp.part_keys.end()));
            }
        }
        // Finite carriers are discrete convex spaces: every affine map into
        // I is constant, so the SigmaI contribution is trivial.
        d.explicit_space = generate_sigma(points, gens);
        return d;
    }
    if (a.as<IntervalQ>()) {
        if (variant != SigmaVariant::SigmaI) d.boolean_gens = boolean_pairs(a);
        if (variant != SigmaVariant::Sigma2) d.interval_family = true;
        return d;
    }
    if (a.as<RInftySp>()) {
        if (variant != SigmaVariant::SigmaI) d.boolean_gens = boolean_pairs(a);
        // Affine maps RInfty -> I are constant (the absorbing point forces
        // it), so SigmaI adds nothing.
        return d;
    }
    throw input_error("sigma_functor: unsupported space kind " + a.kind());
}

MeasurableMap sigma_map(const AffineMap& m, SigmaVariant variant) {
    auto sd = sigma_functor(m.dom, variant);
    auto sc = sigma_functor(m.cod, variant);
    if (!sd.explicit_space || !sc.explicit_space)
        throw input_error("sigma_map: both carriers must be finite");
    std::map<Point, Point> graph;
    for (const auto& e : m.dom.carrier()) graph[elem_str(e)] = elem_str(m(e));
    if (!is_measurable(*sd.explicit_space, *sc.explicit_space, graph))
        throw consistency_error("sigma_map: affine map failed to be measurable");
    MeasurableMap f;
    f.dom = *sd.explicit_space;
    f.cod = *sc.explicit_space;
    f.graph = std::move(graph);
    return f;
}

namespace {

/// Induced finite discrete convex structure on a subset of a finite
/// carrier: interior combinations via cc at 1/2. Fails if the subset is not
/// closed under combination.
ConvexSpace induced_subspace(const ConvexSpace& a, const std::set<std::string>& keys) {
    std::map<std::string, Elem> by_key;
    for (const auto& e : a.carrier()) by_key[elem_str(e)] = e;
    std::map<std::pair<std::string, std::string>, std::string> meet;
    for (const auto& x : keys)
        for (const auto& y : keys) {
            std::string m = elem_str(a.cc(by_key.at(x), by_key.at(y), Rat(1, 2)));
            if (!keys.count(m))
                throw input_error("Boolean part is not closed under combination");
            meet[{x, y}] = m;
        }
    return ConvexSpace::semilattice(std::vector<std::string>(keys.begin(), keys.end()),
                                    std::move(meet));
}

} // namespace

SuiteReport mcoprod_check(const ConvexSpace& a, const BooleanPair& pair) {
    SuiteReport rep;
    rep.suite = "mcoprod";
    if (!a.finite_carrier()) throw input_error("mcoprod_check: finite carrier required");
    if (pair.kind != BooleanPair::Kind::FiniteSet)
        throw input_error("mcoprod_check: explicit pair required");

    // Validate the pair is Boolean.
    if (!is_affine(pair.chi())) throw input_error("mcoprod_check: pair is not Boolean");

    auto sigma2 = *sigma_functor(a, SigmaVariant::Sigma2).explicit_space;

    std::set<std::string> part = pair.part_keys, co;
    for (const auto& e : a.carrier())
        if (!part.count(elem_str(e))) co.insert(elem_str(e));

    std::vector<std::vector<Point>> union_atoms;
    for (const std::set<std::string>* side : {&part, &co}) {
        if (side->empty()) continue;
        ConvexSpace sub = induced_subspace(a, *side);
        auto sub_sigma = *sigma_functor(sub, SigmaVariant::Sigma2).explicit_space;

        // Atoms of Sigma2(A) restricted to the side must equal the side's
        // own atoms.
        std::vector<std::vector<Point>> restricted;
        for (const auto& atom : sigma2.atoms()) {
            std::vector<Point> r;
            for (const auto& p : atom)
                if (side->count(p)) r.push_back(p);
            if (!r.empty()) restricted.push_back(std::move(r));
        }
        std::sort(restricted.begin(), restricted.end());
        auto own = sub_sigma.atoms();
        rep.add("restricted atoms match (" + (side == &part ? std::string("part") : "complement") + ")",
                restricted == own, "restriction differs from the subspace sigma-algebra");
        for (const auto& atom : sub_sigma.atoms()) union_atoms.push_back(atom);
    }

    // The disjoint-union space is isomorphic (here: equal as partitions of
    // the same point set) to Sigma2(A).
    FinMeasSpace coproduct = FinMeasSpace::from_atoms(sigma2.points(), union_atoms);
    rep.add("coproduct equals Sigma2(A)", coproduct == sigma2, "partitions differ");
    return rep;
}

namespace {

struct GeomFunctional {
    AffineMap m;          // into IntervalQ
    std::string trace;
};

/// A coordinate functional rescaled into [0,1] that separates a1, a2, for
/// the geometric families.
std::optional<GeomFunctional> geometric_functional(const ConvexSpace& a, const Elem& a1,
                                                   const Elem& a2) {
    if (a.as<IntervalQ>())
        return GeomFunctional{AffineMap::identity(a), "identity functional"};
    const std::vector<Rat>* v1 = std::get_if<std::vector<Rat>>(&a1);
    const std::vector<Rat>* v2 = std::get_if<std::vector<Rat>>(&a2);
    if (!v1 || !v2 || v1->size() != v2->size()) return std::nullopt;
    for (std::size_t i = 0; i < v1->size(); ++i) {
        if ((*v1)[i] == (*v2)[i]) continue;
        Rat lo(0), hi(1);
        if (const auto* p = a.as<Polytope>()) {
            lo = hi = p->generators.at(0).at(i);
            for (const auto& g : p->generators) {
                if (g[i] < lo) lo = g[i];
                if (g[i] > hi) hi = g[i];
            }
            if (lo == hi) continue;
        }
        std::vector<std::vector<Rat>> row(1, std::vector<Rat>(v1->size(), Rat(0)));
        row[0][i] = Rat(1) / (hi - lo);
        std::vector<Rat> off{-lo / (hi - lo)};
        return GeomFunctional{
            AffineMap::linear(a, ConvexSpace::intervalQ(), std::move(row), std::move(off)),
            "coordinate " + std::to_string(i) + " rescaled into [0,1]"};
    }
    return std::nullopt;
}

CosepWitness filter_witness(const ConvexSpace& a, const Elem& a1, const Elem& a2) {
    for (const auto& bp : boolean_pairs(a)) {
        if (bp.contains(a1) != bp.contains(a2)) {
            CosepWitness w;
            w.ok = true;
            w.set_desc = bp.desc();
            w.trace = "filter characteristic " + bp.desc();
            return w;
        }
    }
    return {};
}

CosepWitness threshold_witness(const ConvexSpace& a, const Elem& a1, const Elem& a2) {
    auto gf = geometric_functional(a, a1, a2);
    if (!gf) return {};
    Rat m1 = std::get<Rat>(gf->m(a1));
    Rat m2 = std::get<Rat>(gf->m(a2));
    if (m1 == m2) return {};
    Rat c = (m1 + m2) / Rat(2);
    CosepWitness w;
    w.ok = true;
    w.set_desc = "preimage of [0, " + c.str() + ") under " + gf->trace;
    w.trace = gf->trace + ", threshold " + c.str();
    return w;
}

} // namespace

CosepWitness cosep_witness(const ConvexSpace& a, const Elem& a1, const Elem& a2) {
    if (a1 == a2) throw input_error("cosep_witness: elements must be distinct");
    if (a.finite_carrier()) {
        CosepWitness w = filter_witness(a, a1, a2);
        if (!w.ok) w.trace = "no separating filter found";
        return w;
    }
    if (a.as<IntervalQ>() || a.as<Simplex>() || a.as<Polytope>()) {
        CosepWitness w = threshold_witness(a, a1, a2);
        if (!w.ok) w.trace = "no separating coordinate functional found";
        return w;
    }
    CosepWitness w;
    w.trace = "unsupported family " + a.kind();
    return w;
}

SuiteReport separated_check(const ConvexSpace& a, SigmaVariant variant,
                            const std::vector<std::pair<Elem, Elem>>& pairs) {
    SuiteReport rep;
    rep.suite = "separated(" + variant_name(variant) + ")";
    for (const auto& [a1, a2] : pairs) {
        CosepWitness w;
        if (variant != SigmaVariant::SigmaI) {
            for (const auto& bp : boolean_pairs(a))
                if (bp.contains(a1) != bp.contains(a2)) {
                    w.ok = true;
                    w.set_desc = bp.desc();
                    break;
                }
        }
        if (!w.ok && variant != SigmaVariant::Sigma2 && !a.finite_carrier() &&
            !a.as<RInftySp>())
            w = threshold_witness(a, a1, a2);
        rep.add("separate " + elem_str(a1) + " vs " + elem_str(a2), w.ok,
                "no witness in " + variant_name(variant) + " generators");
    }
    return rep;
}

SuiteReport separated_check(const ConvexSpace& a, SigmaVariant variant) {
    auto carrier = a.carrier();
    std::vector<std::pair<Elem, Elem>> pairs;
    for (std::size_t i = 0; i < carrier.size(); ++i)
        for (std::size_t j = i + 1; j < carrier.size(); ++j)
            pairs.push_back({carrier[i], carrier[j]});
    return separated_check(a, variant, pairs);
}

} // namespace girylab
